// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace movwall::cli {

using nlohmann::json;

ParameterPath LoopSpec::path() const {
  if (type == "rectangle") return ParameterPath::rectangle(l1, l2, c1, c2, orientation);
  return ParameterPath::polyline(points, true);
}

RunConfig defaults_for(const std::string& command) {
  RunConfig cfg;
  cfg.command = command;
  if (command == "wz") {
    cfg.eta = "1";
    cfg.n = 1;
  }
  return cfg;
}

namespace {

template <class T>
T get(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument("config key '" + key + "' has the wrong type");
  }
}

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidArgument(where + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key)) throw InvalidArgument("unknown config key '" + where + key + "'");
}

LoopSpec parse_loop(const json& j) {
  LoopSpec loop;
  if (!j.is_object() || !j.contains("type")) throw InvalidArgument("config key 'loop' needs a 'type'");
  loop.type = get<std::string>(j.at("type"), "loop.type");
  if (loop.type == "rectangle") {
    require_keys(j, {"type", "l1", "l2", "c1", "c2", "orientation"}, "loop.");
    if (j.contains("l1")) loop.l1 = get<double>(j["l1"], "loop.l1");
    if (j.contains("l2")) loop.l2 = get<double>(j["l2"], "loop.l2");
    if (j.contains("c1")) loop.c1 = get<double>(j["c1"], "loop.c1");
    if (j.contains("c2")) loop.c2 = get<double>(j["c2"], "loop.c2");
    if (j.contains("orientation")) loop.orientation = get<int>(j["orientation"], "loop.orientation");
  } else if (loop.type == "polyline") {
    require_keys(j, {"type", "points"}, "loop.");
    if (!j.contains("points") || !j["points"].is_array())
      throw InvalidArgument("config key 'loop.points' must be an array of [l, c] pairs");
    for (const auto& p : j["points"]) {
      if (!p.is_array() || p.size() != 2)
        throw InvalidArgument("config key 'loop.points' must be an array of [l, c] pairs");
      loop.points.push_back({get<double>(p[0], "loop.points"), get<double>(p[1], "loop.points")});
    }
  } else {
    throw InvalidArgument("loop type must be 'rectangle' or 'polyline'");
  }
  return loop;
}

json loop_json(const LoopSpec& loop) {
  if (loop.type == "rectangle")
    return {{"type", "rectangle"}, {"l1", loop.l1}, {"l2", loop.l2}, {"c1", loop.c1},
            {"c2", loop.c2}, {"orientation", loop.orientation}};
  json pts = json::array();
  for (const auto& p : loop.points) pts.push_back({p.l, p.c});
  return {{"type", "polyline"}, {"points", pts}};
}

template <class T>
std::vector<T> scalar_or_list(const json& j, const std::string& key) {
  if (j.is_array()) return get<std::vector<T>>(j, key);
  return {get<T>(j, key)};
}

}  // namespace

void apply_json(RunConfig& cfg, const json& j) {
  require_keys(j,
               {"command", "eta", "mass", "n", "loop", "method", "mesh", "eps_list", "T_list", "window", "l",
                "c", "n_min", "n_max", "unitary", "degenerate", "check", "curvature_map", "map_points",
                "samples", "resolution", "h", "tol", "seed"},
               "");
  if (j.contains("command")) {
    const auto cmd = get<std::string>(j["command"], "command");
    if (!cfg.command.empty() && cmd != cfg.command)
      throw InvalidArgument("config was written for '" + cmd + "', not '" + cfg.command + "'");
  }
  if (j.contains("eta")) {
    const json& e = j["eta"];
    if (e.is_number()) cfg.eta = e.dump();
    else cfg.eta = get<std::string>(e, "eta");
  }
  if (j.contains("mass")) cfg.mass = get<double>(j["mass"], "mass");
  if (j.contains("n")) cfg.n = get<int>(j["n"], "n");
  if (j.contains("loop")) cfg.loop = parse_loop(j["loop"]);
  if (j.contains("method")) cfg.method = get<std::string>(j["method"], "method");
  if (j.contains("mesh")) cfg.mesh = scalar_or_list<std::size_t>(j["mesh"], "mesh");
  if (j.contains("eps_list")) cfg.eps_list = scalar_or_list<double>(j["eps_list"], "eps_list");
  if (j.contains("T_list")) cfg.T_list = scalar_or_list<double>(j["T_list"], "T_list");
  if (j.contains("window")) cfg.window = get<int>(j["window"], "window");
  if (j.contains("l")) cfg.l = get<double>(j["l"], "l");
  if (j.contains("c")) cfg.c = get<double>(j["c"], "c");
  if (j.contains("n_min")) cfg.n_min = get<int>(j["n_min"], "n_min");
  if (j.contains("n_max")) cfg.n_max = get<int>(j["n_max"], "n_max");
  if (j.contains("unitary")) cfg.unitary = get<std::string>(j["unitary"], "unitary");
  if (j.contains("degenerate")) cfg.degenerate = get<bool>(j["degenerate"], "degenerate");
  if (j.contains("check")) cfg.check = get<std::string>(j["check"], "check");
  if (j.contains("curvature_map")) cfg.curvature_map = get<bool>(j["curvature_map"], "curvature_map");
  if (j.contains("map_points")) cfg.map_points = get<int>(j["map_points"], "map_points");
  if (j.contains("samples")) cfg.samples = get<int>(j["samples"], "samples");
  if (j.contains("resolution")) cfg.resolution = get<double>(j["resolution"], "resolution");
  if (j.contains("h")) cfg.h = get<double>(j["h"], "h");
  if (j.contains("tol")) cfg.tol = get<double>(j["tol"], "tol");
  if (j.contains("seed")) cfg.seed = get<std::uint64_t>(j["seed"], "seed");
}

void apply_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("config file '" + path + "' is not valid JSON: " + e.what());
  }
  apply_json(cfg, j);
}

void validate(const RunConfig& cfg) {
  if (!(cfg.mass > 0.0)) throw InvalidArgument("mass must be positive");
  if (!(cfg.l > 0.0)) throw InvalidArgument("l must be positive");
  if (cfg.loop.type == "rectangle" && cfg.loop.orientation != 1 && cfg.loop.orientation != -1)
    throw InvalidArgument("loop orientation must be 1 or -1");
  if (cfg.mesh.empty()) throw InvalidArgument("mesh list is empty");
  for (std::size_t i = 0; i < cfg.mesh.size(); ++i) {
    if (cfg.mesh[i] < 8) throw InvalidArgument("mesh sizes must be at least 8");
    if (i && cfg.mesh[i] <= cfg.mesh[i - 1]) throw InvalidArgument("mesh sizes must increase");
  }
  if (cfg.eps_list.size() < 3) throw InvalidArgument("eps_list needs at least three widths");
  for (std::size_t i = 0; i < cfg.eps_list.size(); ++i) {
    if (!(cfg.eps_list[i] > 0.0)) throw InvalidArgument("eps_list entries must be positive");
    if (i && cfg.eps_list[i] >= cfg.eps_list[i - 1]) throw InvalidArgument("eps_list must decrease");
  }
  if (cfg.T_list.empty()) throw InvalidArgument("T_list is empty");
  for (double t : cfg.T_list)
    if (!(t > 0.0)) throw InvalidArgument("T_list entries must be positive");
  if (cfg.window < 0) throw InvalidArgument("window must be non-negative");
  if (cfg.n_min > cfg.n_max) throw InvalidArgument("n_min exceeds n_max");
  if (!cfg.check.empty() && cfg.check != "generic") throw InvalidArgument("check must be 'generic'");
  static const std::set<std::string> methods{"all", "analytic", "interior", "mollified", "overlap"};
  if (!methods.contains(cfg.method))
    throw InvalidArgument("method must be one of all, analytic, interior, mollified, overlap");
  if (cfg.map_points < 2) throw InvalidArgument("map_points must be at least 2");
  if (cfg.samples < 1) throw InvalidArgument("samples must be positive");
  if (!(cfg.resolution > 0.0)) throw InvalidArgument("resolution must be positive");
  if (!(cfg.h > 0.0 && cfg.h < 0.5)) throw InvalidArgument("h must lie in (0, 1/2)");
  if (!(cfg.tol > 0.0)) throw InvalidArgument("tol must be positive");
}

json to_json(const RunConfig& cfg) {
  return {{"command", cfg.command},   {"eta", cfg.eta},
          {"mass", cfg.mass},         {"n", cfg.n},
          {"loop", loop_json(cfg.loop)}, {"method", cfg.method},
          {"mesh", cfg.mesh},         {"eps_list", cfg.eps_list},
          {"T_list", cfg.T_list},     {"window", cfg.window},
          {"l", cfg.l},               {"c", cfg.c},
          {"n_min", cfg.n_min},       {"n_max", cfg.n_max},
          {"unitary", cfg.unitary},   {"degenerate", cfg.degenerate},
          {"check", cfg.check},       {"curvature_map", cfg.curvature_map},
          {"map_points", cfg.map_points}, {"samples", cfg.samples},
          {"resolution", cfg.resolution}, {"h", cfg.h},
          {"tol", cfg.tol},           {"seed", cfg.seed}};
}

}  // namespace movwall::cli
