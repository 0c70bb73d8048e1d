#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "darkvid/image.hpp"

namespace darkvid {

// Binary PPM (P6, maxval 255) is the only image codec in the toolkit.
// decode maps channel byte v to v/255; encode maps v in [0,1] to
// round(v*255) with half rounded away from zero, clamped to [0,255].
Image decode_ppm(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_ppm(const Image& img);

Image read_ppm_file(const std::filesystem::path& path);
void write_ppm_file(const std::filesystem::path& path, const Image& img);

}  // namespace darkvid
