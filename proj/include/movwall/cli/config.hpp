// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "movwall/path.hpp"

namespace movwall::cli {

struct LoopSpec {
  std::string type = "rectangle";  ///< "rectangle" or "polyline"
  double l1 = 1.0, l2 = 2.0, c1 = 0.0, c2 = 1.0;
  int orientation = 1;
  std::vector<ParamPoint> points;  ///< polyline vertices, closed implicitly

  [[nodiscard]] ParameterPath path() const;
};

/// Fully resolved settings of one run. Every field has a default, so the JSON
/// written next to an output reproduces it.
struct RunConfig {
  std::string command;
  std::string eta = "i";
  double mass = 1.0;
  int n = 0;
  LoopSpec loop;
  std::string method = "all";
  std::vector<std::size_t> mesh{256, 512, 1024, 2048};
  std::vector<double> eps_list{0.2, 0.1, 0.05, 0.025};  ///< collar widths in units of l
  std::vector<double> T_list{25.0, 50.0, 100.0, 200.0};
  int window = 16;

  double l = 1.0;
  double c = 0.0;
  int n_min = 0;
  int n_max = 4;
  std::string unitary;  ///< bc: explicit 2x2 unitary instead of eta
  bool degenerate = false;
  std::string check;  ///< spectrum: "" or "generic"
  bool curvature_map = false;
  int map_points = 9;
  int samples = 1000;        ///< bc: random boundary-data pairs
  double resolution = 20.0;  ///< adiabatic: time steps per unit time
  double h = 1e-4;           ///< interior prescription step in units of l
  double tol = 1e-3;
  std::uint64_t seed = 0;
};

/// Defaults for one subcommand (wz starts from eta = 1, n = 1).
RunConfig defaults_for(const std::string& command);

/// Overlays the keys present in `j`. Unknown keys and wrong types throw
/// InvalidArgument naming the key.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

/// Reads and overlays a JSON config file.
void apply_file(RunConfig& cfg, const std::string& path);

/// Range and consistency checks; throws InvalidArgument.
void validate(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace movwall::cli
