// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "movwall/common.hpp"

namespace movwall {

/// Point (l, c) of the parameter half-plane.
struct ParamPoint {
  double l = 1.0;
  double c = 0.0;
};

/// Smooth map t in [0, 1] -> (l(t), c(t)) with its derivative.
struct PathSegment {
  std::function<ParamPoint(double)> at;
  std::function<ParamPoint(double)> velocity;
  double length = 0.0;  ///< Euclidean length in the (l, c) plane

  static PathSegment line(ParamPoint from, ParamPoint to);
};

struct RectangleBounds {
  double l1, l2, c1, c2;
};

/// Piecewise-smooth path in the (l, c) half-plane. Orientation +1 is
/// counterclockwise with l on the horizontal axis and c on the vertical.
class ParameterPath {
 public:
  static constexpr double kClosureTol = 1e-12;

  ParameterPath(std::vector<PathSegment> segments, bool closed, int orientation);

  /// Axis-aligned rectangle [l1, l2] x [c1, c2] starting at (l1, c1).
  static ParameterPath rectangle(double l1, double l2, double c1, double c2, int orientation = 1);
  /// Straight segments through the points; `close` appends the return leg.
  /// The orientation is taken from the signed (shoelace) area.
  static ParameterPath polyline(const std::vector<ParamPoint>& points, bool close = true);
  /// Closed path sitting at one point.
  static ParameterPath constant(ParamPoint p);

  [[nodiscard]] const std::vector<PathSegment>& segments() const noexcept { return segments_; }
  [[nodiscard]] bool closed() const noexcept { return closed_; }
  [[nodiscard]] int orientation() const noexcept { return orientation_; }
  [[nodiscard]] double length() const;
  [[nodiscard]] ParamPoint start() const { return segments_.front().at(0.0); }
  [[nodiscard]] const std::optional<RectangleBounds>& rectangle_bounds() const noexcept {
    return rect_;
  }

  /// `count` points along the path, allotted to segments in proportion to
  /// their length, each segment sampled from its start. The closing point is
  /// not repeated.
  [[nodiscard]] std::vector<ParamPoint> discretize(std::size_t count) const;

  /// Throws InvalidArgument unless the path is closed.
  void require_closed(const char* what) const;

 private:
  std::vector<PathSegment> segments_;
  bool closed_;
  int orientation_;
  std::optional<RectangleBounds> rect_;
};

/// Allots `count` integer samples in proportion to weights (largest
/// remainder); evenly when all weights vanish.
std::vector<std::size_t> apportion(const std::vector<double>& weights, std::size_t count);

}  // namespace movwall
