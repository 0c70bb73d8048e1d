#pragma once

#include <cstddef>
#include <vector>

namespace darkvid {

// RGB image with row-major, channel-interleaved doubles in [0,1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<double> data;  // height * width * 3

  Image() = default;
  Image(int h, int w, double fill = 0.0)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w * 3, fill) {}

  double& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  double at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }

  // Unweighted channel mean at one pixel.
  double luminance(int y, int x) const {
    std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return (data[i] + data[i + 1] + data[i + 2]) / 3.0;
  }

  bool same_dims(const Image& o) const {
    return height == o.height && width == o.width;
  }
};

// Ordered frames, all with identical dimensions.
struct VideoClip {
  std::vector<Image> frames;

  int n_frames() const { return static_cast<int>(frames.size()); }
};

}  // namespace darkvid
