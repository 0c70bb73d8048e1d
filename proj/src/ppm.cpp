#include "darkvid/ppm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "darkvid/errors.hpp"

namespace darkvid {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
  throw FormatError("ppm: " + what + " at byte " + std::to_string(offset));
}

// Skips whitespace and '#' comments between header tokens.
void skip_space(const std::vector<std::uint8_t>& b, std::size_t& i) {
  while (i < b.size()) {
    char c = static_cast<char>(b[i]);
    if (c == '#') {
      while (i < b.size() && b[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
    } else {
      break;
    }
  }
}

int parse_int(const std::vector<std::uint8_t>& b, std::size_t& i,
              const char* field) {
  skip_space(b, i);
  if (i >= b.size() || b[i] < '0' || b[i] > '9')
    fail(std::string("expected ") + field, i);
  long v = 0;
  while (i < b.size() && b[i] >= '0' && b[i] <= '9') {
    v = v * 10 + (b[i] - '0');
    if (v > 1000000000L) fail(std::string(field) + " out of range", i);
    ++i;
  }
  return static_cast<int>(v);
}

}  // namespace

Image decode_ppm(const std::vector<std::uint8_t>& bytes) {
  std::size_t i = 0;
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
    fail("magic is not P6", 0);
  i = 2;
  int width = parse_int(bytes, i, "width");
  int height = parse_int(bytes, i, "height");
  int maxval = parse_int(bytes, i, "maxval");
  if (width < 1 || height < 1) fail("dimensions must be positive", i);
  if (maxval != 255) fail("maxval must be 255", i);
  // Exactly one whitespace byte separates the header from the payload.
  if (i >= bytes.size()) fail("missing payload", i);
  char sep = static_cast<char>(bytes[i]);
  if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
    fail("expected whitespace before payload", i);
  ++i;

  std::size_t need = static_cast<std::size_t>(width) * height * 3;
  if (bytes.size() - i < need) fail("truncated payload", bytes.size());

  Image img(height, width);
  for (std::size_t k = 0; k < need; ++k)
    img.data[k] = static_cast<double>(bytes[i + k]) / 255.0;
  return img;
}

std::vector<std::uint8_t> encode_ppm(const Image& img) {
  char header[64];
  int n = std::snprintf(header, sizeof(header), "P6\n%d %d\n255\n", img.width,
                        img.height);
  std::vector<std::uint8_t> out(header, header + n);
  out.reserve(out.size() + img.data.size());
  for (double v : img.data) {
    long q = std::lround(v * 255.0);  // rounds half away from zero
    if (q < 0) q = 0;
    if (q > 255) q = 255;
    out.push_back(static_cast<std::uint8_t>(q));
  }
  return out;
}

Image read_ppm_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("ppm: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_ppm(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_ppm_file(const std::filesystem::path& path, const Image& img) {
  auto bytes = encode_ppm(img);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw FormatError("ppm: cannot open " + path.string() + " for write");
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw FormatError("ppm: short write to " + path.string());
}

}  // namespace darkvid
