#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace darkvid {

// Pipeline configuration. JSON keys match the field names; unknown keys are
// rejected so typos in experiment configs fail loudly.
struct Config {
  int t_frames = 64;
  double beta = 0.0;
  double gamma_max = 1.5;
  double alpha = 4.0;
  double w_spa = 10.0;
  double w_col = 5.0;
  double w_tv = 200.0;
  double exposure_e = 0.6;
  int curve_iters = 8;
  int enhance_steps = 200;
  double enhance_lr = 0.01;
  int head_dim = 32;
  int head_heads = 4;
  int head_layers = 1;
  double focal_gamma = 2.0;
  double focal_alpha = 1.0;
  std::uint64_t seed = 0;
};

Config parse_config(const std::string& json_text);
Config load_config(const std::filesystem::path& path);

}  // namespace darkvid
