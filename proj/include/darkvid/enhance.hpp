#pragma once

#include <cstddef>
#include <vector>

#include "darkvid/image.hpp"

namespace darkvid {

// Per-iteration, per-pixel, per-channel curve parameters in [-1,1]. The
// enhancement curve is applied iters times:
//   LE_0 = I,  LE_n = LE_{n-1} + A_n * LE_{n-1} * (1 - LE_{n-1}).
struct CurveParamMap {
  int iters = 0;
  int height = 0;
  int width = 0;
  std::vector<double> maps;  // iters * height * width * 3

  CurveParamMap() = default;
  CurveParamMap(int n, int h, int w)
      : iters(n), height(h), width(w),
        maps(static_cast<std::size_t>(n) * h * w * 3, 0.0) {}

  std::size_t plane() const { return static_cast<std::size_t>(height) * width * 3; }
  double& at(int n, int y, int x, int c) {
    return maps[n * plane() + (static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  double at(int n, int y, int x, int c) const {
    return maps[n * plane() + (static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
};

struct LossWeights {
  double w_spa = 10.0;
  double w_col = 5.0;
  double w_tv = 200.0;
  double exposure_e = 0.6;  // well-exposedness target
};

// total = w_spa*spa + exp + w_col*col + w_tv*tv (exposure is unweighted).
struct LossBreakdown {
  double spa = 0.0;
  double exp = 0.0;
  double col = 0.0;
  double tv = 0.0;
  double total = 0.0;
};

Image apply_curves(const Image& img, const CurveParamMap& a);

// Spatial consistency over region x region luminance means with 4-neighbor
// differences; images whose sides are not multiples of region are edge-
// replicated to the next multiple.
double loss_spatial(const Image& input, const Image& enhanced, int region = 4);

// Mean |region luminance - e| over non-overlapping region x region tiles;
// partial edge tiles average over their actual pixel count.
double loss_exposure(const Image& enhanced, double e, int region = 16);

// Sum over channel pairs {(R,G),(R,B),(G,B)} of squared differences of
// whole-image channel means.
double loss_color(const Image& enhanced);

// Illumination smoothness: per iteration, mean over pixels of
// sum over channels of (|dx A| + |dy A|)^2 with forward differences that
// vanish on the last row/column; averaged over iterations.
double loss_tv(const CurveParamMap& a);

LossBreakdown loss_total(const Image& img, const CurveParamMap& a,
                         const LossWeights& w);

// Analytic d(total)/dA via reverse accumulation through the curve
// recurrence. Same layout as CurveParamMap::maps. |.| uses subgradient 0
// at kinks.
std::vector<double> grad_total(const Image& img, const CurveParamMap& a,
                               const LossWeights& w);

struct EnhanceOptions {
  int steps = 200;
  double lr = 0.01;
  int curve_iters = 8;
};

struct EnhanceResult {
  Image enhanced;
  CurveParamMap curves;
  std::vector<LossBreakdown> trace;  // trace[k] = loss after k steps
};

// Per-image optimization of the curve maps with Adam-style moments
// (beta1 = 0.9, beta2 = 0.999, eps = 1e-8); A starts at zero and is clamped
// to [-1,1] after every step.
EnhanceResult enhance_image(const Image& img, const LossWeights& w,
                            const EnhanceOptions& opts);

struct FrameReport {
  LossBreakdown initial;
  LossBreakdown final;
  int steps = 0;
};

struct EnhanceClipResult {
  VideoClip clip;
  std::vector<FrameReport> reports;
};

// Independent per-frame enhancement; bit-identical for any worker count.
EnhanceClipResult enhance_clip(const VideoClip& video, const LossWeights& w,
                               const EnhanceOptions& opts, int workers = 1);

// v -> v^(1/g) per channel; requires g > 0.
Image gamma_correct(const Image& img, double g);

}  // namespace darkvid
