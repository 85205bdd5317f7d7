// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/spectral.hpp"

#include <cmath>
#include <string>

namespace movwall {

void GridFunction::validate() const {
  if (nodes.size() < 2) throw InvalidArgument("grid function needs at least two nodes");
  if (values.size() != nodes.size() || weights.size() != nodes.size())
    throw InvalidArgument("grid function sizes do not match");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i] > nodes[i - 1])) throw InvalidArgument("grid nodes must increase strictly");
  for (double w : weights)
    if (!(w > 0.0)) throw InvalidArgument("grid weights must be positive");
}

double GridFunction::norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * std::norm(values[i]);
  return std::sqrt(s);
}

GridFunction GridFunction::uniform(double a, double b, std::size_t count) {
  if (count < 2 || !(b > a)) throw InvalidArgument("invalid uniform grid");
  GridFunction f;
  const double h = (b - a) / static_cast<double>(count - 1);
  f.nodes.resize(count);
  f.values.assign(count, Complex{});
  f.weights.assign(count, h);
  for (std::size_t i = 0; i < count; ++i) f.nodes[i] = a + h * static_cast<double>(i);
  f.weights.front() = f.weights.back() = 0.5 * h;
  return f;
}

double alpha_of(const EtaParameter& eta) {
  if (eta.is_infinite()) return kPi;
  const Complex e = eta.value();
  if (e == Complex(1.0, 0.0))
    throw SingularParameter("alpha is undefined at eta = 1 (degenerate spectrum)");
  // Arg((1+e)/(1-e)) = Arg((1+e) conj(1-e)).
  const Complex z = (1.0 + e) * std::conj(1.0 - e);
  double a = std::atan2(z.imag(), z.real());
  if (a <= -kPi) a = kPi;
  if (z.imag() == 0.0 && z.real() < 0.0) a = kPi;
  return a;
}

double wavenumber(int n, const EtaParameter& eta) {
  if (eta.is_degenerate())
    throw SingularParameter("eta = +-1 has a degenerate spectrum; use the degenerate basis");
  double theta = 0.25 * kPi;
  if (!eta.is_infinite()) {
    const Complex e = eta.value();
    theta = std::atan2(std::abs(1.0 - e), std::abs(1.0 + e));
  }
  return 2.0 * kPi * static_cast<double>(n) + 2.0 * theta;
}

Mode make_mode(int n, const EtaParameter& eta) {
  return Mode{n, wavenumber(n, eta), alpha_of(eta), eta};
}

Complex eigenfunction_fixed(const Mode& mode, double x) {
  const Complex phase = std::polar(1.0, mode.alpha);
  return std::sin(mode.k * x) + phase * std::cos(mode.k * x);
}

Complex eigenfunction_fixed_d1(const Mode& mode, double x) {
  const Complex phase = std::polar(1.0, mode.alpha);
  return mode.k * (std::cos(mode.k * x) - phase * std::sin(mode.k * x));
}

Complex eigenfunction_fixed_d2(const Mode& mode, double x) {
  return -mode.k * mode.k * eigenfunction_fixed(mode, x);
}

Complex eigenfunction_extended(const Mode& mode, const Geometry& g, double x) {
  return eigenfunction_fixed(mode, (x - g.c()) / g.l()) / std::sqrt(g.l());
}

Complex eigenfunction_physical(const Mode& mode, const Geometry& g, double x) {
  if (x < g.left() || x > g.right()) return {};
  return eigenfunction_extended(mode, g, x);
}

BoundaryData endpoint_data(const Mode& mode) {
  return {eigenfunction_fixed(mode, -0.5), eigenfunction_fixed(mode, 0.5),
          eigenfunction_fixed_d1(mode, -0.5), eigenfunction_fixed_d1(mode, 0.5)};
}

BoundaryData endpoint_data(const Mode& mode, const Geometry& g) {
  return dilation_transport(endpoint_data(mode), g.l(), g.c());
}

double eigenvalue(const Mode& mode, const Geometry& g, const MassConvention& mc) {
  return mode.k * mode.k / (2.0 * mc.mass() * g.l() * g.l());
}

EigenLevel make_level(const Mode& mode, const Geometry& g, const MassConvention& mc) {
  return EigenLevel{mode, eigenvalue(mode, g, mc), g, mc};
}

std::pair<double, double> DegenerateBasis::operator()(double x) const {
  const double s = std::sqrt(2.0);
  return {s * std::cos(k * x), s * std::sin(k * x)};
}

std::pair<double, double> DegenerateBasis::derivative(double x) const {
  const double s = std::sqrt(2.0) * k;
  return {-s * std::sin(k * x), s * std::cos(k * x)};
}

DegenerateBasis make_degenerate_basis(int eta_sign, int n) {
  if (eta_sign == 1) {
    if (n < 1) throw InvalidArgument("eta = 1 degenerate levels start at n = 1");
    return {1, n, 2.0 * kPi * n};
  }
  if (eta_sign == -1) {
    if (n < 0) throw InvalidArgument("eta = -1 degenerate levels start at n = 0");
    return {-1, n, (2.0 * n + 1.0) * kPi};
  }
  throw InvalidArgument("degenerate basis exists only for eta = +1 or -1");
}

std::pair<double, double> degenerate_basis(int eta_sign, int n, double x) {
  return make_degenerate_basis(eta_sign, n)(x);
}

}  // namespace movwall
