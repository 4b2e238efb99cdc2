#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trustgame/sweep.hpp"

namespace trustgame {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ConfigError("config: " + message);
}

Vec read_vec(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_array() || v.empty()) fail("'" + key + "' must be a non-empty array");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) fail("'" + key + "' must hold numbers");
    out[static_cast<Eigen::Index>(i)] = v[i].get<double>();
  }
  return out;
}

double read_num(const json& j, const std::string& key) {
  if (!j.at(key).is_number()) fail("'" + key + "' must be a number");
  return j.at(key).get<double>();
}

int read_int(const json& j, const std::string& key) {
  if (!j.at(key).is_number_integer()) fail("'" + key + "' must be an integer");
  return j.at(key).get<int>();
}

std::uint64_t read_seed(const json& j, const std::string& key) {
  if (!j.at(key).is_number_integer() || j.at(key).get<std::int64_t>() < 0) {
    fail("'" + key + "' must be a non-negative integer");
  }
  return j.at(key).get<std::uint64_t>();
}

// Accepts a single number (applied to both axes) or a two-element array.
void read_axis_pair(const json& j, const std::string& key, double GridAxis::*field,
                    GridSpec& grid) {
  const json& v = j.at(key);
  if (v.is_number()) {
    grid.x.*field = v.get<double>();
    grid.y.*field = v.get<double>();
    return;
  }
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    grid.x.*field = v[0].get<double>();
    grid.y.*field = v[1].get<double>();
    return;
  }
  fail("'" + key + "' must be a number or a two-element array");
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "y_hat",          "mu",
      "zeta",           "y_attack",
      "var_y",          "var_yhat",
      "y_bar0",         "grid_min",
      "grid_max",       "grid_step",
      "y_attack_base",  "init_count",
      "init_radius",    "seed",
      "mode",           "max_iter",
      "alpha_tol",      "tau_one",
      "divergence_norm","report_rel_tol",
      "consistency_slack", "threads",
      "zeta_center",    "zeta_radii",
      "zeta_samples",   "zeta_seed",
      "zeta_on_circle", "epsilon",
  };
  return keys;
}

}  // namespace

SweepConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    fail(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  for (const auto& item : j.items()) {
    if (!known_keys().count(item.key())) fail("unknown key '" + item.key() + "'");
  }

  SweepConfig cfg;
  try {
    for (const char* key : {"y_hat", "mu", "zeta"}) {
      if (!j.contains(key)) fail(std::string("missing required key '") + key + "'");
    }
    cfg.base.y_hat = read_vec(j, "y_hat");
    cfg.base.mu = read_vec(j, "mu");
    cfg.base.zeta = read_vec(j, "zeta");
    const Eigen::Index dim = cfg.base.y_hat.size();
    cfg.base.y_attack =
        j.contains("y_attack") ? read_vec(j, "y_attack") : Vec(Vec::Zero(dim));
    if (j.contains("var_y")) cfg.base.var_y = read_num(j, "var_y");
    if (j.contains("var_yhat")) cfg.base.var_y_hat = read_num(j, "var_yhat");

    if (j.contains("grid_min")) read_axis_pair(j, "grid_min", &GridAxis::min, cfg.grid);
    if (j.contains("grid_max")) read_axis_pair(j, "grid_max", &GridAxis::max, cfg.grid);
    if (j.contains("grid_step")) read_axis_pair(j, "grid_step", &GridAxis::step, cfg.grid);
    if (j.contains("y_attack_base")) cfg.y_attack_base = read_vec(j, "y_attack_base");

    if (j.contains("init_count")) cfg.init_count = read_int(j, "init_count");
    if (j.contains("init_radius")) cfg.init_radius = read_num(j, "init_radius");
    if (j.contains("seed")) cfg.seed = read_seed(j, "seed");
    if (j.contains("mode")) {
      const std::string mode = j.at("mode").is_string()
                                   ? j.at("mode").get<std::string>()
                                   : std::string();
      if (mode == "weak") {
        cfg.mode = SweepMode::kWeak;
      } else if (mode == "strong") {
        cfg.mode = SweepMode::kStrong;
      } else {
        fail("'mode' must be \"weak\" or \"strong\"");
      }
    }
    if (j.contains("max_iter")) cfg.ibr.max_iter = read_int(j, "max_iter");
    if (j.contains("alpha_tol")) cfg.ibr.alpha_tol = read_num(j, "alpha_tol");
    if (j.contains("tau_one")) cfg.ibr.tau_one = read_num(j, "tau_one");
    if (j.contains("divergence_norm")) {
      cfg.ibr.divergence_norm = read_num(j, "divergence_norm");
    }
    if (j.contains("report_rel_tol")) {
      cfg.ibr.report_rel_tol = read_num(j, "report_rel_tol");
    }
    if (j.contains("consistency_slack")) {
      cfg.consistency_slack = read_num(j, "consistency_slack");
    }
    if (j.contains("threads")) cfg.threads = read_int(j, "threads");

    if (j.contains("zeta_center")) cfg.zeta_center = read_vec(j, "zeta_center");
    if (j.contains("zeta_radii")) {
      const json& radii = j.at("zeta_radii");
      if (!radii.is_array()) fail("'zeta_radii' must be an array");
      for (const json& r : radii) {
        if (!r.is_number()) fail("'zeta_radii' must hold numbers");
        cfg.zeta_radii.push_back(r.get<double>());
      }
    }
    if (j.contains("zeta_samples")) cfg.zeta_samples = read_int(j, "zeta_samples");
    if (j.contains("zeta_seed")) cfg.zeta_seed = read_seed(j, "zeta_seed");
    if (j.contains("zeta_on_circle")) {
      if (!j.at("zeta_on_circle").is_boolean()) {
        fail("'zeta_on_circle' must be a boolean");
      }
      cfg.zeta_on_circle = j.at("zeta_on_circle").get<bool>();
    }
    if (j.contains("epsilon")) cfg.epsilon = read_num(j, "epsilon");
    if (j.contains("y_bar0")) cfg.y_bar0 = read_vec(j, "y_bar0");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(e.what());
  }

  cfg.validate();
  return cfg;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace trustgame
