#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "darkvid/image.hpp"
#include "darkvid/rng.hpp"

namespace darkvid {

// Frame-selection strategies. "delta" jitters the sampling rate by a random
// delta and pads both sides with blank frames; the other three are the
// baselines it is compared against.
enum class Strategy { delta, constant, length_adjusted, variable };

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);

struct SamplingParams {
  int t_frames = 64;    // network input length T
  double beta = 0.0;    // lower bound of delta
  double gamma_max = 1.5;  // upper bound of delta
  double alpha = 4.0;   // sampling-rate cap
};

// Training-set statistics needed by the constant and variable strategies.
struct DatasetStats {
  int n_max = 0;
  int n_min = 0;
};

struct SamplePlan {
  double rate = 1.0;         // adjusted sampling rate S
  double delta = 0.0;        // the delta draw (0 for non-delta strategies)
  std::vector<int> indices;  // M source-frame indices, non-decreasing, < N
  int p1 = 0;                // leading blank slots
  int p2 = 0;                // trailing blank slots

  int m() const { return static_cast<int>(indices.size()); }
};

// Exactly T slots; slot i is an all-zero image where blank_mask[i] is true.
struct SampledClip {
  std::vector<Image> frames;
  std::vector<bool> blank_mask;
};

// delta = beta + u * (gamma_max - beta), u uniform in [0,1).
double draw_delta(Rng& rng, double beta, double gamma_max);

// rate = min((N + T*delta) / T, alpha).
double compute_sampling_rate(int n_frames, int t_frames, double delta,
                             double alpha);

// M = floor(N/rate) indices, index_k = floor(k*rate). Indices repeat when
// rate < 1 (a short video is stretched); they are strictly increasing when
// rate >= 1. Throws NumericError when M = 0.
std::vector<int> sample_indices(int n_frames, double rate);

// (p1, p2) with p1 uniform over {0, ..., T-M-1} and p2 = T-M-p1; (0,0) when
// M = T. The half-open draw means p2 >= 1 whenever padding exists.
std::pair<int, int> pad_plan(int m, int t_frames, Rng& rng);

// Full plan for one video of n_frames under a strategy. stats is required
// for the constant and variable strategies. Consumes rng draws in a fixed
// order, so identical seeds give identical plans.
SamplePlan make_plan(int n_frames, Strategy strategy,
                     const SamplingParams& params,
                     const std::optional<DatasetStats>& stats, Rng& rng);

std::pair<SampledClip, SamplePlan> sample_clip(
    const VideoClip& video, Strategy strategy, const SamplingParams& params,
    const std::optional<DatasetStats>& stats, Rng& rng);

// count independent delta-strategy plans for test-time augmentation.
std::vector<SamplePlan> tta_param_sets(int n_frames,
                                       const SamplingParams& params, Rng& rng,
                                       int count = 5);

// Applies an existing plan to the frames (blank slots become all-zero
// images with the clip's dimensions).
SampledClip apply_plan(const VideoClip& video, const SamplePlan& plan);

}  // namespace darkvid
