// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace movwall::cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  std::string color = "#1f77b4";
  bool dashed = false;   ///< reference curves
  bool markers = true;
};

struct LinePlot {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;
};

/// Standalone SVG document: axes, ticks, labels and legend, no external assets.
std::string render_line_plot(const LinePlot& plot);

struct HeatMap {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<double> xs;                   ///< column centres
  std::vector<double> ys;                   ///< row centres
  std::vector<std::vector<double>> values;  ///< values[row][column]
};

std::string render_heat_map(const HeatMap& map);

}  // namespace movwall::cli
