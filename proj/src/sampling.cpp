#include "darkvid/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "darkvid/errors.hpp"

namespace darkvid {

Strategy strategy_from_name(const std::string& name) {
  if (name == "delta") return Strategy::delta;
  if (name == "constant") return Strategy::constant;
  if (name == "length_adjusted") return Strategy::length_adjusted;
  if (name == "variable") return Strategy::variable;
  throw FormatError("sampling: unknown strategy \"" + name + "\"");
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::delta: return "delta";
    case Strategy::constant: return "constant";
    case Strategy::length_adjusted: return "length_adjusted";
    case Strategy::variable: return "variable";
  }
  return "?";
}

double draw_delta(Rng& rng, double beta, double gamma_max) {
  if (beta > gamma_max)
    throw FormatError("sampling: beta > gamma_max");
  return beta + rng.next_uniform() * (gamma_max - beta);
}

double compute_sampling_rate(int n_frames, int t_frames, double delta,
                             double alpha) {
  double rate = (n_frames + t_frames * delta) / t_frames;
  return rate < alpha ? rate : alpha;
}

std::vector<int> sample_indices(int n_frames, double rate) {
  int m = static_cast<int>(std::floor(n_frames / rate));
  if (m <= 0)
    throw NumericError("sampling: degenerate video, zero frames at rate " +
                       std::to_string(rate));
  std::vector<int> indices(m);
  for (int k = 0; k < m; ++k) {
    int idx = static_cast<int>(std::floor(k * rate));
    indices[k] = idx < n_frames ? idx : n_frames - 1;
  }
  return indices;
}

std::pair<int, int> pad_plan(int m, int t_frames, Rng& rng) {
  if (m > t_frames)
    throw std::logic_error("sampling: M > T reached pad_plan");
  if (m == t_frames) return {0, 0};
  int p1 = rng.next_int(t_frames - m);
  return {p1, t_frames - m - p1};
}

namespace {

// When the alpha cap forces more than T sampled frames (N > alpha*T), keep
// the central T indices so the action's middle portion survives.
void truncate_centrally(std::vector<int>& indices, int t_frames) {
  int m = static_cast<int>(indices.size());
  if (m <= t_frames) return;
  int start = (m - t_frames) / 2;
  indices = std::vector<int>(indices.begin() + start,
                             indices.begin() + start + t_frames);
}

}  // namespace

SamplePlan make_plan(int n_frames, Strategy strategy,
                     const SamplingParams& params,
                     const std::optional<DatasetStats>& stats, Rng& rng) {
  if (n_frames < 1) throw FormatError("sampling: empty video");
  const int t = params.t_frames;

  SamplePlan plan;
  switch (strategy) {
    case Strategy::delta: {
      plan.delta = draw_delta(rng, params.beta, params.gamma_max);
      plan.rate = compute_sampling_rate(n_frames, t, plan.delta, params.alpha);
      plan.indices = sample_indices(n_frames, plan.rate);
      break;
    }
    case Strategy::constant: {
      if (!stats || stats->n_max < 1)
        throw FormatError("sampling: constant strategy needs dataset n_max");
      plan.rate = static_cast<double>(stats->n_max) / t;
      plan.indices = sample_indices(n_frames, plan.rate);
      break;
    }
    case Strategy::length_adjusted: {
      // Covers all T slots exactly: index_k = floor(k*N/T) in integer
      // arithmetic, immune to the floating-point edge of floor(N/(N/T)).
      plan.rate = static_cast<double>(n_frames) / t;
      plan.indices.resize(t);
      for (int k = 0; k < t; ++k)
        plan.indices[k] = static_cast<int>(
            (static_cast<long long>(k) * n_frames) / t);
      break;
    }
    case Strategy::variable: {
      if (!stats || stats->n_max < 1 || stats->n_min < 1)
        throw FormatError("sampling: variable strategy needs dataset n_min/n_max");
      double lo = static_cast<double>(stats->n_min) / t;
      double hi = static_cast<double>(stats->n_max) / t;
      plan.rate = lo + rng.next_uniform() * (hi - lo);
      plan.indices = sample_indices(n_frames, plan.rate);
      break;
    }
  }

  truncate_centrally(plan.indices, t);
  auto [p1, p2] = pad_plan(plan.m(), t, rng);
  plan.p1 = p1;
  plan.p2 = p2;
  return plan;
}

SampledClip apply_plan(const VideoClip& video, const SamplePlan& plan) {
  const int t = plan.p1 + plan.m() + plan.p2;
  const int h = video.frames.front().height;
  const int w = video.frames.front().width;

  SampledClip out;
  out.frames.reserve(t);
  out.blank_mask.assign(t, false);
  for (int i = 0; i < plan.p1; ++i) {
    out.frames.emplace_back(h, w);
    out.blank_mask[i] = true;
  }
  for (int idx : plan.indices) out.frames.push_back(video.frames[idx]);
  for (int i = 0; i < plan.p2; ++i) {
    out.frames.emplace_back(h, w);
    out.blank_mask[plan.p1 + plan.m() + i] = true;
  }
  return out;
}

std::pair<SampledClip, SamplePlan> sample_clip(
    const VideoClip& video, Strategy strategy, const SamplingParams& params,
    const std::optional<DatasetStats>& stats, Rng& rng) {
  if (video.n_frames() < 1) throw FormatError("sampling: empty video");
  SamplePlan plan = make_plan(video.n_frames(), strategy, params, stats, rng);
  return {apply_plan(video, plan), plan};
}

std::vector<SamplePlan> tta_param_sets(int n_frames,
                                       const SamplingParams& params, Rng& rng,
                                       int count) {
  if (count < 1) throw FormatError("sampling: tta count must be >= 1");
  std::vector<SamplePlan> plans;
  plans.reserve(count);
  for (int i = 0; i < count; ++i)
    plans.push_back(make_plan(n_frames, Strategy::delta, params, std::nullopt, rng));
  return plans;
}

}  // namespace darkvid
