// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/path.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace movwall {

PathSegment PathSegment::line(ParamPoint from, ParamPoint to) {
  const double dl = to.l - from.l;
  const double dc = to.c - from.c;
  return PathSegment{
      [=](double t) { return ParamPoint{from.l + t * dl, from.c + t * dc}; },
      [=](double) { return ParamPoint{dl, dc}; },
      std::hypot(dl, dc),
  };
}

ParameterPath::ParameterPath(std::vector<PathSegment> segments, bool closed, int orientation)
    : segments_(std::move(segments)), closed_(closed), orientation_(orientation) {
  if (segments_.empty()) throw InvalidArgument("a path needs at least one segment");
  if (orientation_ != 1 && orientation_ != -1)
    throw InvalidArgument("path orientation must be +1 or -1");
  for (const auto& seg : segments_) {
    // Straight and gently curved segments: checking a fine sample suffices.
    for (int i = 0; i <= 16; ++i)
      if (!(seg.at(i / 16.0).l > 0.0)) throw InvalidArgument("path leaves the half-plane l > 0");
  }
  if (closed_) {
    const ParamPoint a = segments_.front().at(0.0);
    const ParamPoint b = segments_.back().at(1.0);
    if (std::abs(a.l - b.l) > kClosureTol || std::abs(a.c - b.c) > kClosureTol)
      throw InvalidArgument("closed path does not return to its start point");
  }
}

ParameterPath ParameterPath::rectangle(double l1, double l2, double c1, double c2,
                                       int orientation) {
  std::vector<ParamPoint> corners{{l1, c1}, {l2, c1}, {l2, c2}, {l1, c2}};
  if (orientation == -1) std::reverse(corners.begin() + 1, corners.end());
  std::vector<PathSegment> segs;
  for (std::size_t i = 0; i < 4; ++i) segs.push_back(PathSegment::line(corners[i], corners[(i + 1) % 4]));
  ParameterPath path(std::move(segs), true, orientation);
  path.rect_ = RectangleBounds{l1, l2, c1, c2};
  return path;
}

ParameterPath ParameterPath::polyline(const std::vector<ParamPoint>& points, bool close) {
  if (points.size() < 2) throw InvalidArgument("polyline needs at least two points");
  std::vector<PathSegment> segs;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) segs.push_back(PathSegment::line(points[i], points[i + 1]));
  const ParamPoint& first = points.front();
  const ParamPoint& last = points.back();
  const bool ends_meet = std::abs(first.l - last.l) <= kClosureTol && std::abs(first.c - last.c) <= kClosureTol;
  if (close && !ends_meet) segs.push_back(PathSegment::line(last, first));
  double area = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ParamPoint& p = points[i];
    const ParamPoint& q = points[(i + 1) % points.size()];
    area += p.l * q.c - q.l * p.c;
  }
  return ParameterPath(std::move(segs), close || ends_meet, area < 0.0 ? -1 : 1);
}

ParameterPath ParameterPath::constant(ParamPoint p) {
  return ParameterPath({PathSegment::line(p, p)}, true, 1);
}

double ParameterPath::length() const {
  double s = 0.0;
  for (const auto& seg : segments_) s += seg.length;
  return s;
}

std::vector<std::size_t> apportion(const std::vector<double>& weights, std::size_t count) {
  const std::size_t n = weights.size();
  std::vector<std::size_t> out(n, 0);
  if (n == 0) return out;
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) {
    for (std::size_t i = 0; i < count; ++i) ++out[i % n];
    return out;
  }
  std::size_t assigned = 0;
  std::vector<std::pair<double, std::size_t>> remainders;
  for (std::size_t i = 0; i < n; ++i) {
    const double exact = static_cast<double>(count) * weights[i] / total;
    out[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += out[i];
    remainders.emplace_back(exact - static_cast<double>(out[i]), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < count; ++i, ++assigned) ++out[remainders[i % n].second];
  return out;
}

std::vector<ParamPoint> ParameterPath::discretize(std::size_t count) const {
  std::vector<double> lengths;
  for (const auto& seg : segments_) lengths.push_back(seg.length);
  const auto per_segment = apportion(lengths, count);
  std::vector<ParamPoint> pts;
  pts.reserve(count);
  for (std::size_t s = 0; s < segments_.size(); ++s) {
    const std::size_t m = per_segment[s];
    for (std::size_t i = 0; i < m; ++i)
      pts.push_back(segments_[s].at(static_cast<double>(i) / static_cast<double>(m)));
  }
  return pts;
}

void ParameterPath::require_closed(const char* what) const {
  if (!closed_) throw InvalidArgument(std::string(what) + " requires a closed path");
}

}  // namespace movwall
