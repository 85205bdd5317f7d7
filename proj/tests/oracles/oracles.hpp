// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations used only by the tests. None of them calls the
// library routine it checks.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace movwall::oracle {

using cd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

/// Fundamental solutions of psi'' = -kappa^2 psi on [-1/2, 1/2], integrated
/// with classical RK4 from the left end. Returns
/// {f1(b), f1'(b), f2(b), f2'(b)} for f1 = (1, 0), f2 = (0, 1) at a.
inline std::array<double, 4> shoot(double kappa, int steps) {
  const double h = 1.0 / steps;
  std::array<double, 4> out{};
  for (int which = 0; which < 2; ++which) {
    double y = which == 0 ? 1.0 : 0.0;
    double v = which == 0 ? 0.0 : 1.0;
    const double k2 = kappa * kappa;
    for (int i = 0; i < steps; ++i) {
      const double y1 = v, v1 = -k2 * y;
      const double y2 = v + 0.5 * h * v1, v2 = -k2 * (y + 0.5 * h * y1);
      const double y3 = v + 0.5 * h * v2, v3 = -k2 * (y + 0.5 * h * y2);
      const double y4 = v + h * v3, v4 = -k2 * (y + h * y3);
      y += h / 6.0 * (y1 + 2 * y2 + 2 * y3 + y4);
      v += h / 6.0 * (v1 + 2 * v2 + 2 * v3 + v4);
    }
    out[2 * which] = y;
    out[2 * which + 1] = v;
  }
  return out;
}

/// Smallest singular value of the 2x2 boundary system over the largest one.
inline double shooting_residual(cd eta, double kappa, int steps) {
  const auto s = shoot(kappa, steps);
  const cd m00 = 1.0 - eta * s[0], m01 = -eta * s[2];
  const cd m10 = -s[1], m11 = std::conj(eta) - s[3];
  const double fro2 = std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11);
  const double det = std::abs(m00 * m11 - m01 * m10);
  const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4 * det * det));
  // smin * smax = |det| avoids the cancellation in fro2 - disc.
  const double smax2 = 0.5 * (fro2 + disc);
  return det / smax2;
}

/// Golden-section minimisation of the shooting residual on [lo, hi]; returns
/// the minimising kappa.
inline double shooting_eigen_wavenumber(cd eta, double lo, double hi, int steps = 4000) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = shooting_residual(eta, c, steps), fd = shooting_residual(eta, d, steps);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = shooting_residual(eta, c, steps);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = shooting_residual(eta, d, steps);
    }
  }
  return 0.5 * (a + b);
}

/// int_{-1/2}^{1/2} u^p e^{i w u} du for p = 0, 1, in closed form.
inline cd exp_moment(int p, double w) {
  if (std::abs(w) < 1e-6) {
    if (p == 0) return 1.0 - w * w / 24.0;
    return cd(0.0, w / 12.0);
  }
  const double s = std::sin(w / 2), c = std::cos(w / 2);
  if (p == 0) return 2.0 * s / w;
  return cd(0.0, -1.0) * (c / w - 2.0 * s / (w * w));
}

/// phi(u) = sin(k u) + e^{i alpha} cos(k u) written as sum_j a_j e^{i s_j k u}.
struct ExpExpansion {
  std::array<cd, 2> coeff;  // for e^{+i k u}, e^{-i k u}
  double k;
};

inline ExpExpansion expand(double k, double alpha) {
  const cd e = std::polar(1.0, alpha);
  const cd i(0.0, 1.0);
  return {{1.0 / (2.0 * i) + 0.5 * e, -1.0 / (2.0 * i) + 0.5 * e}, k};
}

/// <phi_m | -i phi_n'> and <phi_m | (u p - i/2) phi_n> from exp_moment.
inline std::pair<cd, cd> momentum_and_virial(double km, double kn, double alpha) {
  const ExpExpansion a = expand(km, alpha);
  const ExpExpansion b = expand(kn, alpha);
  const double sgn[2] = {1.0, -1.0};
  const cd i(0.0, 1.0);
  cd p = 0.0, x = 0.0, overlap = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      const cd ca = std::conj(a.coeff[r]);
      const double w = sgn[s] * kn - sgn[r] * km;
      // phi_n' term: d/du e^{i s kn u} = i s kn e^{...}
      const cd dn = i * sgn[s] * kn * b.coeff[s];
      p += -i * ca * dn * exp_moment(0, w);
      x += -i * ca * dn * exp_moment(1, w);
      overlap += ca * b.coeff[s] * exp_moment(0, w);
    }
  x += -0.5 * i * overlap;
  return {p, x};
}

/// Midpoint-rule overlap of two box eigenfunctions, written out directly.
inline cd midpoint_overlap(double k, double alpha, double l1, double c1, double l2, double c2,
                           int nodes) {
  const double a = std::max(c1 - l1 / 2, c2 - l2 / 2);
  const double b = std::min(c1 + l1 / 2, c2 + l2 / 2);
  const cd e = std::polar(1.0, alpha);
  auto psi = [&](double l, double c, double x) {
    const double u = (x - c) / l;
    return (std::sin(k * u) + e * std::cos(k * u)) / std::sqrt(l);
  };
  const double h = (b - a) / nodes;
  cd s = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double x = a + (i + 0.5) * h;
    s += std::conj(psi(l1, c1, x)) * psi(l2, c2, x) * h;
  }
  return s;
}

/// exp(A) of a 2x2 complex matrix by scaling and squaring of a Taylor series.
using M2 = std::array<std::array<cd, 2>, 2>;
inline M2 mul(const M2& a, const M2& b) {
  M2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}
inline M2 expm(M2 a) {
  double norm = 0.0;
  for (auto& r : a)
    for (auto& v : r) norm = std::max(norm, std::abs(v));
  int squarings = 0;
  while (norm > 0.1) {
    norm /= 2;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& r : a)
    for (auto& v : r) v *= scale;
  M2 term{{{1, 0}, {0, 1}}}, sum = term;
  for (int n = 1; n < 30; ++n) {
    term = mul(term, a);
    for (auto& r : term)
      for (auto& v : r) v /= static_cast<double>(n);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return sum;
}

}  // namespace movwall::oracle
