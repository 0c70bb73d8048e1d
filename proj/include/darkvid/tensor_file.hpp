#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace darkvid {

// "DSRB v1" container: magic "DSRB", version u8 = 1, dtype u8 (1 = f32,
// 2 = f64), ndim u8 (<= 8), reserved u8 = 0, ndim u32 little-endian extents,
// then the row-major little-endian payload. A tensor with no dims holds no
// values.
enum class Dtype : std::uint8_t { f32 = 1, f64 = 2 };

struct TensorFile {
  Dtype dtype = Dtype::f64;
  std::vector<std::uint32_t> dims;
  std::vector<double> values;  // f32 payloads are widened on decode

  std::size_t element_count() const {
    if (dims.empty()) return 0;
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
  }
};

std::vector<std::uint8_t> encode_tensor(Dtype dtype,
                                        const std::vector<std::uint32_t>& dims,
                                        const std::vector<double>& values);
TensorFile decode_tensor(const std::vector<std::uint8_t>& bytes);

TensorFile read_tensor_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, Dtype dtype,
                       const std::vector<std::uint32_t>& dims,
                       const std::vector<double>& values);

}  // namespace darkvid
