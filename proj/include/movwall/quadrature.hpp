// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace movwall {

/// Nodes and weights of a quadrature rule on a fixed interval.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Gauss-Legendre rule with `order` nodes on [-1, 1]. Rules are cached.
const QuadratureRule& gauss_legendre(std::size_t order);

/// Composite Gauss-Legendre on [a, b] with `panels` equal panels of `order`
/// nodes each.
QuadratureRule composite_gauss_legendre(double a, double b, std::size_t panels,
                                        std::size_t order = 16);

/// Composite rule on [a, b] with at least 64 nodes per wavelength of an
/// oscillation with the given wavenumber (radians per unit length).
QuadratureRule oscillatory_rule(double a, double b, double wavenumber,
                                std::size_t min_panels = 4);

/// Concatenation of composite rules over consecutive breakpoints.
QuadratureRule piecewise_rule(std::span<const double> breakpoints, double wavenumber,
                              std::size_t min_panels = 4);

}  // namespace movwall
