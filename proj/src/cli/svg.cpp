// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace movwall::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo, hi;
  bool log;
  double pixel_lo, pixel_hi;

  [[nodiscard]] double map(double v) const {
    const double a = log ? std::log10(v) : v;
    return pixel_lo + (a - lo) / (hi - lo) * (pixel_hi - pixel_lo);
  }
  [[nodiscard]] std::vector<double> ticks() const {
    std::vector<double> t;
    if (log) {
      for (double e = std::ceil(lo); e <= std::floor(hi) + 1e-9; e += 1.0) t.push_back(std::pow(10.0, e));
      if (t.size() < 2) t = {std::pow(10.0, lo), std::pow(10.0, hi)};
    } else {
      for (int i = 0; i <= 4; ++i) t.push_back(lo + (hi - lo) * i / 4.0);
    }
    return t;
  }
};

Axis make_axis(std::vector<double> values, bool log, double p0, double p1) {
  if (log) {
    std::erase_if(values, [](double v) { return !(v > 0.0) || !std::isfinite(v); });
    for (auto& v : values) v = std::log10(v);
  } else {
    std::erase_if(values, [](double v) { return !std::isfinite(v); });
  }
  double lo = values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
  double hi = values.empty() ? 1.0 : *std::max_element(values.begin(), values.end());
  if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
    lo -= log ? 0.5 : std::max(0.5, 0.1 * std::abs(lo));
    hi += log ? 0.5 : std::max(0.5, 0.1 * std::abs(hi));
  } else if (!log) {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  return {lo, hi, log, p0, p1};
}

std::string header(const std::string& title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
       num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" + escape(title) + "</text>\n";
  return s;
}

std::string frame(const Axis& x, const Axis& y, const std::string& xlabel, const std::string& ylabel) {
  std::string s;
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  s += "<rect x=\"" + num(x0) + "\" y=\"" + num(y1) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
       num(y0 - y1) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : x.ticks()) {
    const double px = x.map(t);
    s += "<line x1=\"" + num(px) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(px) + "\" y2=\"" + num(y0 + 5) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + tick_label(t) + "</text>\n";
  }
  for (double t : y.ticks()) {
    const double py = y.map(t);
    s += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(py) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(py + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + tick_label(t) + "</text>\n";
  }
  s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 18) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape(xlabel) + "</text>\n";
  s += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"13\" transform=\"rotate(-90 18 " + num((y0 + y1) / 2) + ")\">" + escape(ylabel) + "</text>\n";
  return s;
}

}  // namespace

std::string render_line_plot(const LinePlot& plot) {
  std::vector<double> xs, ys;
  for (const auto& s : plot.series)
    for (const auto& [x, y] : s.points) {
      xs.push_back(x);
      ys.push_back(y);
    }
  const Axis x = make_axis(xs, plot.log_x, kLeft, kWidth - kRight);
  const Axis y = make_axis(ys, plot.log_y, kHeight - kBottom, kTop);
  std::string out = header(plot.title) + frame(x, y, plot.xlabel, plot.ylabel);
  auto usable = [&](double px, double py) {
    return std::isfinite(px) && std::isfinite(py) && (!plot.log_x || px > 0) && (!plot.log_y || py > 0);
  };
  double legend_y = kTop + 10;
  for (const auto& s : plot.series) {
    std::string pts;
    for (const auto& [px, py] : s.points)
      if (usable(px, py)) pts += num(x.map(px)) + "," + num(y.map(py)) + " ";
    out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"" +
           (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + " points=\"" + pts + "\"/>\n";
    if (s.markers)
      for (const auto& [px, py] : s.points)
        if (usable(px, py))
          out += "<circle cx=\"" + num(x.map(px)) + "\" cy=\"" + num(y.map(py)) + "\" r=\"3\" fill=\"" +
                 s.color + "\"/>\n";
    const double lx = kWidth - kRight + 12;
    out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(legend_y) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" +
           num(legend_y) + "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"" +
           (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    out += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(legend_y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) + "</text>\n";
    legend_y += 18;
  }
  return out + "</svg>\n";
}

std::string render_heat_map(const HeatMap& map) {
  const Axis x = make_axis(map.xs, false, kLeft, kWidth - kRight);
  const Axis y = make_axis(map.ys, false, kHeight - kBottom, kTop);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& row : map.values)
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (!(hi > lo)) hi = lo + 1.0;
  auto colour = [&](double v) {
    const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(255 * t), static_cast<int>(80 + 100 * (1 - std::abs(2 * t - 1))),
                  static_cast<int>(255 * (1 - t)));
    return std::string(buf);
  };
  auto half_step = [](const std::vector<double>& v, std::size_t i) {
    if (v.size() < 2) return 0.5;
    const std::size_t j = i + 1 < v.size() ? i : i - 1;
    return 0.5 * std::abs(v[j + 1] - v[j]);
  };
  std::string out = header(map.title);
  for (std::size_t r = 0; r < map.ys.size(); ++r)
    for (std::size_t c = 0; c < map.xs.size(); ++c) {
      const double hx = half_step(map.xs, c), hy = half_step(map.ys, r);
      const double px0 = x.map(map.xs[c] - hx), px1 = x.map(map.xs[c] + hx);
      const double py0 = y.map(map.ys[r] + hy), py1 = y.map(map.ys[r] - hy);
      out += "<rect x=\"" + num(px0) + "\" y=\"" + num(py0) + "\" width=\"" + num(px1 - px0) + "\" height=\"" +
             num(py1 - py0) + "\" fill=\"" + colour(map.values[r][c]) + "\"/>\n";
    }
  out += frame(x, y, map.xlabel, map.ylabel);
  const double lx = kWidth - kRight + 20;
  for (int i = 0; i <= 10; ++i) {
    const double v = hi - (hi - lo) * i / 10.0;
    out += "<rect x=\"" + num(lx) + "\" y=\"" + num(kTop + 20 * i) + "\" width=\"20\" height=\"20\" fill=\"" +
           colour(v) + "\"/>\n";
    if (i % 5 == 0)
      out += "<text x=\"" + num(lx + 26) + "\" y=\"" + num(kTop + 20 * i + 14) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + tick_label(v) + "</text>\n";
  }
  return out + "</svg>\n";
}

}  // namespace movwall::cli
