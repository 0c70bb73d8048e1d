#pragma once

#include <filesystem>

#include "darkvid/image.hpp"

namespace darkvid {

// A video is a directory of frames named frame_000001.ppm ... frame_N.ppm,
// contiguous from 1. Files not matching that pattern are ignored, so plan
// and report JSON may live next to the frames.
VideoClip load_video(const std::filesystem::path& dir);
void save_video(const std::filesystem::path& dir, const VideoClip& clip);

}  // namespace darkvid
