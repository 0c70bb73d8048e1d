#include "darkvid/tensor_file.hpp"

#include <cstring>
#include <fstream>
#include <string>

#include "darkvid/errors.hpp"

namespace darkvid {

namespace {

constexpr char kMagic[4] = {'D', 'S', 'R', 'B'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

std::vector<std::uint8_t> encode_tensor(Dtype dtype,
                                        const std::vector<std::uint32_t>& dims,
                                        const std::vector<double>& values) {
  if (dims.size() > 8) throw FormatError("tensor: more than 8 dims");
  std::size_t count = dims.empty() ? 0 : 1;
  for (auto d : dims) count *= d;
  if (count != values.size())
    throw FormatError("tensor: dims product " + std::to_string(count) +
                      " does not match value count " +
                      std::to_string(values.size()));

  std::vector<std::uint8_t> out;
  out.reserve(8 + 4 * dims.size() +
              values.size() * (dtype == Dtype::f32 ? 4 : 8));
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(1);  // version
  out.push_back(static_cast<std::uint8_t>(dtype));
  out.push_back(static_cast<std::uint8_t>(dims.size()));
  out.push_back(0);  // reserved
  for (auto d : dims) put_u32(out, d);

  if (dtype == Dtype::f32) {
    for (double v : values) {
      float f = static_cast<float>(v);
      std::uint32_t bits;
      std::memcpy(&bits, &f, 4);
      put_u32(out, bits);
    }
  } else {
    for (double v : values) {
      std::uint64_t bits;
      std::memcpy(&bits, &v, 8);
      put_u32(out, static_cast<std::uint32_t>(bits & 0xFFFFFFFFull));
      put_u32(out, static_cast<std::uint32_t>(bits >> 32));
    }
  }
  return out;
}

TensorFile decode_tensor(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("tensor: bad magic");
  if (bytes[4] != 1)
    throw FormatError("tensor: unsupported version " + std::to_string(bytes[4]));
  std::uint8_t dt = bytes[5];
  if (dt != 1 && dt != 2)
    throw FormatError("tensor: unknown dtype " + std::to_string(dt));
  std::uint8_t ndim = bytes[6];
  if (ndim > 8) throw FormatError("tensor: more than 8 dims");

  std::size_t pos = 8;
  if (bytes.size() < pos + 4u * ndim) throw FormatError("tensor: truncated dims");
  TensorFile t;
  t.dtype = static_cast<Dtype>(dt);
  for (int i = 0; i < ndim; ++i) {
    t.dims.push_back(get_u32(bytes.data() + pos));
    pos += 4;
  }

  std::size_t count = t.element_count();
  std::size_t width = t.dtype == Dtype::f32 ? 4 : 8;
  if (bytes.size() != pos + count * width)
    throw FormatError("tensor: payload length mismatch, expected " +
                      std::to_string(pos + count * width) + " bytes, got " +
                      std::to_string(bytes.size()));

  t.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (t.dtype == Dtype::f32) {
      std::uint32_t bits = get_u32(bytes.data() + pos + 4 * i);
      float f;
      std::memcpy(&f, &bits, 4);
      t.values[i] = static_cast<double>(f);
    } else {
      std::uint64_t lo = get_u32(bytes.data() + pos + 8 * i);
      std::uint64_t hi = get_u32(bytes.data() + pos + 8 * i + 4);
      std::uint64_t bits = lo | (hi << 32);
      std::memcpy(&t.values[i], &bits, 8);
    }
  }
  return t;
}

TensorFile read_tensor_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw FormatError("tensor: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_tensor(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_tensor_file(const std::filesystem::path& path, Dtype dtype,
                       const std::vector<std::uint32_t>& dims,
                       const std::vector<double>& values) {
  auto bytes = encode_tensor(dtype, dims, values);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw FormatError("tensor: cannot open " + path.string() + " for write");
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw FormatError("tensor: short write to " + path.string());
}

}  // namespace darkvid
