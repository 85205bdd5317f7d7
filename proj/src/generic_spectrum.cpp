// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

// Generic eigen-solver for -(1/2m) d^2/dx^2 on I_{l,c} under an arbitrary
// boundary unitary U.
//
// On a real basis {f1, f2} of solutions of -f''/(2m) = E f the boundary
// condition reads M(E) (A, B)^T = 0 with M = rho2 - U rho1 evaluated on the
// basis. Writing P = rho1(basis), rho2(basis) = conj(P) for real E, and
// S = conj(P) P^{-1} is unitary, so det M = det P det U det(U^+ S - 1) and
//
//     r(E) = Re(det M / sqrt(det U)) / |det P|
//
// is a real function (with one fixed branch of sqrt(det U)) that changes sign
// at every simple eigenvalue and is independent of the choice of real basis
// up to a global sign. Double roots are located as zeros of |M| / |P|.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "movwall/quadrature.hpp"
#include "movwall/spectral.hpp"

namespace movwall {

namespace {

// Endpoint values (f(a), f'(a), f(b), f'(b)) of the two basis solutions on
// y in [-h, h]. Hyperbolic solutions are scaled by 1/cosh(kappa h).
struct BasisEndpoints {
  double f1[4];
  double f2[4];
};

BasisEndpoints basis_endpoints(double s, double l) {
  const double h = 0.5 * l;
  BasisEndpoints e{};
  if (s == 0.0) {
    e = {{1.0, 0.0, 1.0, 0.0}, {-h, 1.0, h, 1.0}};
  } else if (s > 0.0) {
    const double kappa = s / l;
    const double cs = std::cos(kappa * h);
    const double sn = std::sin(kappa * h);
    e = {{cs, kappa * sn, cs, -kappa * sn}, {-sn / kappa, cs, sn / kappa, cs}};
  } else {
    const double kappa = -s / l;
    const double t = std::tanh(kappa * h);
    e = {{1.0, -kappa * t, 1.0, kappa * t}, {-t / kappa, 1.0, t / kappa, 1.0}};
  }
  return e;
}

struct BoundarySystem {
  Mat2 p;  // rho1 of the basis, columns f1, f2
  Mat2 m;  // rho2 - U rho1
};

BoundarySystem boundary_system(const Mat2& u, double l, double s) {
  const BasisEndpoints e = basis_endpoints(s, l);
  Mat2 p;
  Mat2 q;
  const double* cols[2] = {e.f1, e.f2};
  for (int j = 0; j < 2; ++j) {
    const double* f = cols[j];
    p(0, j) = Complex(f[0], -f[1]);
    p(1, j) = Complex(f[2], f[3]);
    q(0, j) = Complex(f[0], f[1]);
    q(1, j) = Complex(f[2], -f[3]);
  }
  return {p, q - u * p};
}

class Secular {
 public:
  Secular(const BoundaryUnitary& u, const Geometry& g)
      : u_(u.matrix()), l_(g.l()), sqrt_det_u_(std::sqrt(u.matrix().determinant())) {}

  double operator()(double s) const {
    const BoundarySystem sys = boundary_system(u_, l_, s);
    const Complex det_m = sys.m.determinant() / sqrt_det_u_;
    return det_m.real() / std::abs(sys.p.determinant());
  }

  // Relative size of the boundary matrix; vanishes at double roots.
  double relative_norm(double s) const {
    const BoundarySystem sys = boundary_system(u_, l_, s);
    return sys.m.norm() / sys.p.norm();
  }

  // Gauss-Newton on |M(s)|^2 / |P|^2. Near a double root M(s) ~ (s - s0) M',
  // so a few steps reach s0 to rounding where a bracketing minimiser stalls
  // at sqrt(eps).
  double refine_double_root(double s) const {
    for (int it = 0; it < 4; ++it) {
      const double h = 1e-6 * std::max(1.0, std::abs(s));
      const Mat2 m0 = scaled(s);
      const Mat2 d = (scaled(s + h) - scaled(s - h)) / (2.0 * h);
      const double dd = d.squaredNorm();
      if (!(dd > 0.0)) break;
      s -= (d.adjoint() * m0).trace().real() / dd;
    }
    return s;
  }

  Eigen::JacobiSVD<Mat2> svd(double s) const {
    const BoundarySystem sys = boundary_system(u_, l_, s);
    return Eigen::JacobiSVD<Mat2>(sys.m / sys.p.norm(), Eigen::ComputeFullV);
  }

  [[nodiscard]] double l() const noexcept { return l_; }

 private:
  [[nodiscard]] Mat2 scaled(double s) const {
    const BoundarySystem sys = boundary_system(u_, l_, s);
    return sys.m / sys.p.norm();
  }

  Mat2 u_;
  double l_;
  Complex sqrt_det_u_;
};

constexpr double kMultiplicityTol = 1e-6;
constexpr double kDoubleRootTol = 1e-7;

// Solution A f1 + B f2 at local coordinate y, unscaled bases as above.
Complex basis_combination(double s, double l, Complex a, Complex b, double y) {
  const double h = 0.5 * l;
  if (s == 0.0) return a + b * y;
  if (s > 0.0) {
    const double kappa = s / l;
    return a * std::cos(kappa * y) + b * (std::sin(kappa * y) / kappa);
  }
  const double kappa = -s / l;
  const double ep = std::exp(kappa * (y - h));
  const double em = std::exp(-kappa * (y + h));
  const double den = 1.0 + std::exp(-2.0 * kappa * h);
  return a * ((ep + em) / den) + b * ((ep - em) / (den * kappa));
}

GridFunction sample_eigenfunction(double s, const Geometry& g, const Vec2& coeffs,
                                  std::size_t nodes_per_panel) {
  const double kappa = std::abs(s) / g.l();
  const double wavelengths = g.l() * kappa / (2.0 * kPi);
  const auto panels = std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(4.0 * wavelengths)));
  const QuadratureRule rule = composite_gauss_legendre(g.left(), g.right(), panels, nodes_per_panel);
  GridFunction f;
  f.nodes = rule.nodes;
  f.weights = rule.weights;
  f.values.resize(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i)
    f.values[i] = basis_combination(s, g.l(), coeffs(0), coeffs(1), rule.nodes[i] - g.c());
  return f;
}

void normalize(GridFunction& f) {
  const double n = f.norm();
  for (auto& v : f.values) v /= n;
}

Complex inner(const GridFunction& a, const GridFunction& b) {
  Complex s{};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    s += a.weights[i] * std::conj(a.values[i]) * b.values[i];
  return s;
}

double lambda_of(double s, double l, double mass) {
  const double kappa = s / l;
  return (s >= 0.0 ? 1.0 : -1.0) * kappa * kappa / (2.0 * mass);
}

}  // namespace

double secular_function(const BoundaryUnitary& u, const Geometry& g, double scaled_wavenumber) {
  return Secular(u, g)(scaled_wavenumber);
}

std::vector<GenericLevel> generic_spectrum(const BoundaryUnitary& u, int count,
                                           const MassConvention& mc, const Geometry& g,
                                           const GenericSpectrumOptions& options) {
  if (count < 1) throw InvalidArgument("generic_spectrum needs count >= 1");
  const Secular r(u, g);

  // Scan grid: hyperbolic branch (s < 0) from far out towards zero, geometric
  // beyond |s| = 8 and uniform below; then the oscillatory branch.
  std::vector<double> hyper;
  for (double q = options.max_hyperbolic; q > 8.0; q /= 1.02) hyper.push_back(-q);
  for (double q = 8.0; q > 0.5 * options.bracket_step; q -= options.bracket_step) hyper.push_back(-q);

  std::vector<double> roots;
  auto add_root = [&](double s) {
    for (double x : roots)
      if (std::abs(x - s) <= 1e-9 * std::max(1.0, std::abs(s))) return;
    roots.push_back(s);
  };

  boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 3);
  auto bracket = [&](double a, double fa, double b, double fb) {
    if (fa == 0.0) {
      add_root(a);
      return;
    }
    if (fa * fb < 0.0) {
      std::uintmax_t iters = 200;
      const auto [lo, hi] = boost::math::tools::toms748_solve(r, a, b, fa, fb, tol, iters);
      add_root(0.5 * (lo + hi));
    }
  };
  auto check_minimum = [&](double a, double b, double fa, double fm, double fb) {
    if (fa * fm <= 0.0 || fm * fb <= 0.0) return;
    if (!(std::abs(fm) < std::abs(fa) && std::abs(fm) <= std::abs(fb))) return;
    std::uintmax_t iters = 300;
    const auto [smin, vmin] = boost::math::tools::brent_find_minima(
        [&](double s) { return r.relative_norm(s); }, a, b, std::numeric_limits<double>::digits,
        iters);
    if (vmin > 1e-3) return;
    const double refined = r.refine_double_root(smin);
    if (refined > a && refined < b && r.relative_norm(refined) < kDoubleRootTol) add_root(refined);
  };

  auto scan = [&](const std::vector<double>& grid) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = r(grid[i]);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
      bracket(grid[i], values[i], grid[i + 1], values[i + 1]);
    if (!grid.empty() && values.back() == 0.0) add_root(grid.back());
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
      check_minimum(grid[i - 1], grid[i + 1], values[i - 1], values[i], values[i + 1]);
  };

  auto multiplicity_at = [&](double s) {
    const auto svd = r.svd(s);
    int m = 0;
    for (int i = 0; i < 2; ++i)
      if (svd.singularValues()(i) < kMultiplicityTol) ++m;
    return std::max(m, 1);
  };
  auto counted = [&]() {
    int total = 0;
    for (double s : roots) total += multiplicity_at(s);
    return total;
  };

  // Hyperbolic branch and zero, then oscillatory windows until enough levels.
  hyper.push_back(0.0);
  double next = options.bracket_step;
  hyper.push_back(next);
  scan(hyper);
  while (counted() < count) {
    if (next > options.max_scaled_wavenumber) {
      std::ostringstream msg;
      msg << "generic_spectrum found " << counted() << " of " << count
          << " levels below kappa*l = " << options.max_scaled_wavenumber;
      throw ConvergenceError(msg.str());
    }
    // Overlap by two points so minima at window edges are seen.
    std::vector<double> grid{next - options.bracket_step};
    for (int i = 0; i < 64; ++i) grid.push_back(grid.back() + options.bracket_step);
    next = grid.back();
    scan(grid);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<GenericLevel> levels;
  for (double s : roots) {
    if (static_cast<int>(levels.size()) >= count) break;
    const auto svd = r.svd(s);
    const int mult = multiplicity_at(s);
    const double lambda = lambda_of(s, g.l(), mc.mass());
    std::vector<GridFunction> funcs;
    for (int j = 0; j < mult; ++j) {
      const Vec2 coeffs = svd.matrixV().col(1 - j);
      GridFunction f = sample_eigenfunction(s, g, coeffs, options.eigenfunction_nodes_per_panel);
      for (const auto& prev : funcs) {
        const Complex ov = inner(prev, f);
        for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] -= ov * prev.values[i];
      }
      normalize(f);
      funcs.push_back(std::move(f));
    }
    for (auto& f : funcs) {
      if (static_cast<int>(levels.size()) >= count) break;
      levels.push_back(GenericLevel{lambda, s, mult, std::move(f)});
    }
  }
  return levels;
}

}  // namespace movwall
