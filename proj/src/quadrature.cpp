// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "movwall/common.hpp"

namespace movwall {

namespace {

// Returns (P_n(x), P_{n-1}(x)) by the three-term recurrence.
std::pair<double, double> legendre_pair(std::size_t n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

QuadratureRule build_gauss_legendre(std::size_t n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, pm] = legendre_pair(n, x);
      const double dp = nd * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [pn, pm] = legendre_pair(n, x);
    const double dp = nd * (x * pn - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(std::size_t order) {
  if (order < 2) throw InvalidArgument("Gauss-Legendre order must be at least 2");
  static std::mutex mutex;
  static std::map<std::size_t, QuadratureRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gauss_legendre(order)).first;
  return it->second;
}

QuadratureRule composite_gauss_legendre(double a, double b, std::size_t panels,
                                        std::size_t order) {
  if (panels == 0) throw InvalidArgument("need at least one panel");
  const QuadratureRule& base = gauss_legendre(order);
  QuadratureRule rule;
  rule.nodes.reserve(panels * order);
  rule.weights.reserve(panels * order);
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < order; ++i) {
      rule.nodes.push_back(mid + 0.5 * width * base.nodes[i]);
      rule.weights.push_back(0.5 * width * base.weights[i]);
    }
  }
  return rule;
}

QuadratureRule oscillatory_rule(double a, double b, double wavenumber, std::size_t min_panels) {
  // 16-node panels, four per wavelength.
  const double wavelengths = std::abs(b - a) * std::abs(wavenumber) / (2.0 * kPi);
  const auto panels = std::max<std::size_t>(min_panels,
                                            static_cast<std::size_t>(std::ceil(4.0 * wavelengths)));
  return composite_gauss_legendre(a, b, panels, 16);
}

QuadratureRule piecewise_rule(std::span<const double> breakpoints, double wavenumber,
                              std::size_t min_panels) {
  QuadratureRule rule;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    QuadratureRule part = oscillatory_rule(a, b, wavenumber, min_panels);
    rule.nodes.insert(rule.nodes.end(), part.nodes.begin(), part.nodes.end());
    rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
  }
  return rule;
}

}  // namespace movwall
