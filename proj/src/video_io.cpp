#include "darkvid/video_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>

#include "darkvid/errors.hpp"
#include "darkvid/ppm.hpp"

namespace fs = std::filesystem;

namespace darkvid {

namespace {

// Returns the frame index for "frame_NNNNNN.ppm" names, -1 otherwise.
long frame_index(const std::string& name) {
  if (name.size() != 16) return -1;
  if (name.rfind("frame_", 0) != 0 || name.substr(12) != ".ppm") return -1;
  long idx = 0;
  for (int i = 6; i < 12; ++i) {
    char c = name[i];
    if (c < '0' || c > '9') return -1;
    idx = idx * 10 + (c - '0');
  }
  return idx;
}

std::string frame_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%06d.ppm", index);
  return buf;
}

}  // namespace

VideoClip load_video(const fs::path& dir) {
  if (!fs::is_directory(dir))
    throw FormatError("video: " + dir.string() + " is not a directory");

  std::map<long, fs::path> found;
  for (const auto& entry : fs::directory_iterator(dir)) {
    long idx = frame_index(entry.path().filename().string());
    if (idx > 0) found[idx] = entry.path();
  }
  if (found.empty())
    throw FormatError("video: no frame_NNNNNN.ppm files in " + dir.string());

  long n = static_cast<long>(found.size());
  for (long i = 1; i <= n; ++i) {
    if (!found.count(i))
      throw FormatError("video: missing frame " + std::to_string(i) + " in " +
                        dir.string());
  }

  VideoClip clip;
  clip.frames.reserve(found.size());
  for (long i = 1; i <= n; ++i) {
    Image img = read_ppm_file(found[i]);
    if (!clip.frames.empty() && !img.same_dims(clip.frames.front()))
      throw FormatError("video: frame " + std::to_string(i) +
                        " has dimensions " + std::to_string(img.width) + "x" +
                        std::to_string(img.height) +
                        ", expected " + std::to_string(clip.frames.front().width) +
                        "x" + std::to_string(clip.frames.front().height));
    clip.frames.push_back(std::move(img));
  }
  return clip;
}

void save_video(const fs::path& dir, const VideoClip& clip) {
  fs::create_directories(dir);
  for (int i = 0; i < clip.n_frames(); ++i)
    write_ppm_file(dir / frame_name(i + 1), clip.frames[i]);
}

}  // namespace darkvid
