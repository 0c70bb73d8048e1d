#include "darkvid/config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "darkvid/errors.hpp"

namespace darkvid {

namespace {

using nlohmann::json;

[[noreturn]] void range_error(const std::string& key) {
  throw FormatError("config: value out of range for key \"" + key + "\"");
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) range_error(key);
  return j[key].get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) range_error(key);
  return j[key].get<int>();
}

}  // namespace

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("config: top level must be an object");

  static const std::set<std::string> known = {
      "t_frames",    "beta",       "gamma_max",  "alpha",
      "w_spa",       "w_col",      "w_tv",       "exposure_e",
      "curve_iters", "enhance_steps", "enhance_lr", "head_dim",
      "head_heads",  "head_layers", "focal_gamma", "focal_alpha",
      "seed"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key()))
      throw FormatError("config: unknown key \"" + it.key() + "\"");
  }

  Config c;
  c.t_frames = get_int(j, "t_frames", c.t_frames);
  c.beta = get_number(j, "beta", c.beta);
  c.gamma_max = get_number(j, "gamma_max", c.gamma_max);
  c.alpha = get_number(j, "alpha", c.alpha);
  c.w_spa = get_number(j, "w_spa", c.w_spa);
  c.w_col = get_number(j, "w_col", c.w_col);
  c.w_tv = get_number(j, "w_tv", c.w_tv);
  c.exposure_e = get_number(j, "exposure_e", c.exposure_e);
  c.curve_iters = get_int(j, "curve_iters", c.curve_iters);
  c.enhance_steps = get_int(j, "enhance_steps", c.enhance_steps);
  c.enhance_lr = get_number(j, "enhance_lr", c.enhance_lr);
  c.head_dim = get_int(j, "head_dim", c.head_dim);
  c.head_heads = get_int(j, "head_heads", c.head_heads);
  c.head_layers = get_int(j, "head_layers", c.head_layers);
  c.focal_gamma = get_number(j, "focal_gamma", c.focal_gamma);
  c.focal_alpha = get_number(j, "focal_alpha", c.focal_alpha);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<double>() < 0)
      range_error("seed");
    c.seed = j["seed"].get<std::uint64_t>();
  }

  if (c.t_frames < 1) range_error("t_frames");
  if (c.beta < 0 || c.beta > c.gamma_max) range_error("beta");
  if (c.alpha < 1) range_error("alpha");
  if (c.w_spa < 0) range_error("w_spa");
  if (c.w_col < 0) range_error("w_col");
  if (c.w_tv < 0) range_error("w_tv");
  if (c.exposure_e <= 0 || c.exposure_e >= 1) range_error("exposure_e");
  if (c.curve_iters < 1) range_error("curve_iters");
  if (c.enhance_steps < 1) range_error("enhance_steps");
  if (c.enhance_lr <= 0) range_error("enhance_lr");
  if (c.head_dim < 1) range_error("head_dim");
  if (c.head_heads < 1 || c.head_dim % c.head_heads != 0) range_error("head_heads");
  if (c.head_layers != 1) range_error("head_layers");
  if (c.focal_gamma < 0) range_error("focal_gamma");
  if (c.focal_alpha < 0) range_error("focal_alpha");
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("config: cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  return parse_config(text);
}

}  // namespace darkvid
