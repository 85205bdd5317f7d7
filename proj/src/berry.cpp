// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/berry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "movwall/quadrature.hpp"

namespace movwall {

namespace {

void require_nondegenerate(const Mode& mode) {
  if (mode.eta.is_degenerate())
    throw SingularParameter("the Abelian connection needs a nondegenerate level (eta != +-1)");
}

double local_wavenumber(const Mode& mode, double l) { return std::abs(mode.k) / l; }

// Five-point central difference of a parameter-dependent value.
template <class F>
Complex central_difference(F&& f, double h) {
  return (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
}

}  // namespace

Mollifier Mollifier::smooth_step() {
  return Mollifier([](double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / (1.0 - t));
    const double b = std::exp(-1.0 / t);
    return a / (a + b);
  });
}

ConnectionSample connection_analytic(const Mode& mode, const Geometry& g) {
  require_nondegenerate(mode);
  return {0.0, mode.k / g.l() * std::sin(mode.alpha), g, mode};
}

ConnectionSample connection_interior(const Mode& mode, const Geometry& g, double h) {
  require_nondegenerate(mode);
  if (!(h > 0.0)) throw InvalidArgument("parameter step must be positive");
  if (h >= 0.5 * g.l())
    throw InvalidArgument("parameter step too large: shifted boxes no longer overlap");
  const double l = g.l();
  const double c = g.c();
  const QuadratureRule rule = oscillatory_rule(g.left(), g.right(), local_wavenumber(mode, l - 2 * h));
  double a_l = 0.0;
  double a_c = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    const Complex psi = eigenfunction_extended(mode, g, x);
    const Complex dl = central_difference(
        [&](double d) { return eigenfunction_extended(mode, Geometry(l + d, c), x); }, h);
    const Complex dc = central_difference(
        [&](double d) { return eigenfunction_extended(mode, Geometry(l, c + d), x); }, h);
    a_l += rule.weights[i] * (std::conj(psi) * dl).imag();
    a_c += rule.weights[i] * (std::conj(psi) * dc).imag();
  }
  return {a_l, a_c, g, mode};
}

ConnectionSample connection_interior(const Mode& mode, const Geometry& g) {
  return connection_interior(mode, g, kInteriorRelativeStep * g.l());
}

ConnectionSample connection_mollified(const Mode& mode, const Geometry& g, const Mollifier& rho,
                                      double eps) {
  require_nondegenerate(mode);
  if (!(eps > 0.0)) throw InvalidArgument("collar width eps must be positive");
  const double l = g.l();
  const double c = g.c();
  const double half = 0.5 * l;
  const std::array<double, 4> breaks{g.left() - eps, g.left(), g.right(), g.right() + eps};
  // The collar carries the steep part of rho; give it at least eight panels.
  const QuadratureRule rule = piecewise_rule(breaks, local_wavenumber(mode, l), 8);
  const double scale = 1.0 / (l * std::sqrt(l));
  double norm2 = 0.0;
  double num_l = 0.0;
  double num_c = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    const double dist = std::abs(x - c) - half;
    const double chi = dist <= 0.0 ? 1.0 : rho(dist / eps);
    const double chi2 = chi * chi;
    if (chi2 == 0.0) continue;
    const double u = (x - c) / l;
    const Complex f = eigenfunction_fixed(mode, u);
    const Complex df = eigenfunction_fixed_d1(mode, u);
    const Complex phi = f / std::sqrt(l);
    const Complex d_c = -scale * df;
    const Complex d_l = -scale * (0.5 * f + u * df);
    const double w = rule.weights[i] * chi2;
    norm2 += w * std::norm(phi);
    num_l += w * (std::conj(phi) * d_l).imag();
    num_c += w * (std::conj(phi) * d_c).imag();
  }
  return {num_l / norm2, num_c / norm2, g, mode};
}

std::vector<double> default_eps_list(const Geometry& g) {
  return {0.2 * g.l(), 0.1 * g.l(), 0.05 * g.l(), 0.025 * g.l()};
}

Extrapolation richardson_extrapolate(const std::vector<double>& h, const std::vector<double>& v) {
  if (h.size() != v.size() || v.size() < 3)
    throw InvalidArgument("extrapolation needs at least three matching samples");
  for (std::size_t i = 1; i < h.size(); ++i)
    if (!(h[i] < h[i - 1]) || !(h[i] > 0.0))
      throw InvalidArgument("extrapolation steps must be positive and strictly decreasing");
  const std::size_t n = v.size() - 1;
  const double d1 = v[n - 2] - v[n - 1];
  const double d2 = v[n - 1] - v[n];
  const double tiny = 1e-12 * std::max(1.0, std::abs(v[n]));
  if (std::abs(d1) <= tiny && std::abs(d2) <= tiny) return {v[n], std::numeric_limits<double>::infinity()};
  const double ratio = h[n - 1] / h[n];
  const double order = std::log(std::abs(d1 / d2)) / std::log(ratio);
  if (!std::isfinite(order) || order <= 0.0) return {v[n], order};
  return {v[n] - d2 / (std::pow(ratio, order) - 1.0), order};
}

MollifiedSeries mollified_extrapolation(const Mode& mode, const Geometry& g, const Mollifier& rho,
                                        const std::vector<double>& eps_list) {
  if (eps_list.size() < 3) throw InvalidArgument("extrapolation needs at least three eps values");
  MollifiedSeries series;
  series.eps = eps_list;
  std::vector<double> vl;
  std::vector<double> vc;
  for (double eps : eps_list) {
    series.samples.push_back(connection_mollified(mode, g, rho, eps));
    vl.push_back(series.samples.back().a_l);
    vc.push_back(series.samples.back().a_c);
  }
  const Extrapolation el = richardson_extrapolate(eps_list, vl);
  const Extrapolation ec = richardson_extrapolate(eps_list, vc);
  series.extrapolated = {el.value, ec.value, g, mode};
  series.order_l = el.order;
  series.order_c = ec.order;
  return series;
}

double loop_phase(const ParameterPath& path,
                  const std::function<ConnectionSample(const Geometry&)>& connection,
                  std::size_t nodes_per_segment) {
  path.require_closed("loop_phase");
  const QuadratureRule rule = composite_gauss_legendre(0.0, 1.0, 1, nodes_per_segment);
  double phase = 0.0;
  for (const auto& seg : path.segments()) {
    if (seg.length == 0.0) continue;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const ParamPoint p = seg.at(rule.nodes[i]);
      const ParamPoint v = seg.velocity(rule.nodes[i]);
      const ConnectionSample a = connection(Geometry(p.l, p.c));
      phase -= rule.weights[i] * (a.a_l * v.l + a.a_c * v.c);
    }
  }
  return phase;
}

double loop_phase_analytic(const Mode& mode, const ParameterPath& path) {
  require_nondegenerate(mode);
  return loop_phase(path, [&](const Geometry& g) { return connection_analytic(mode, g); });
}

namespace {

constexpr double kMinOverlap = 1e-6;

Complex hard_wall_overlap(const Mode& mode, const ParamPoint& p, const ParamPoint& q) {
  const Geometry gp(p.l, p.c);
  const Geometry gq(q.l, q.c);
  const double a = std::max(gp.left(), gq.left());
  const double b = std::min(gp.right(), gq.right());
  if (!(b > a)) return {};
  const QuadratureRule rule =
      oscillatory_rule(a, b, local_wavenumber(mode, std::min(p.l, q.l)));
  Complex s{};
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    s += rule.weights[i] * std::conj(eigenfunction_extended(mode, gp, x)) *
         eigenfunction_extended(mode, gq, x);
  }
  return s;
}

struct ProductPhase {
  double phase;
  double min_overlap;
};

ProductPhase overlap_product(const Mode& mode, const ParameterPath& path, std::size_t mesh,
                             const Gauge& gauge) {
  const std::vector<ParamPoint> pts = path.discretize(mesh);
  Complex z{1.0, 0.0};
  double min_overlap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const std::size_t next = (j + 1) % pts.size();
    Complex ov = hard_wall_overlap(mode, pts[j], pts[next]);
    if (gauge) ov *= std::polar(1.0, gauge(next) - gauge(j));
    const double mag = std::abs(ov);
    min_overlap = std::min(min_overlap, mag);
    if (mag < kMinOverlap)
      throw ConvergenceError("overlap vanishes between consecutive mesh points; mesh too coarse");
    z *= ov / mag;
  }
  return {-std::arg(z), min_overlap};
}

}  // namespace

OverlapPhase loop_phase_overlap(const Mode& mode, const ParameterPath& path, std::size_t mesh,
                                const Gauge& gauge) {
  require_nondegenerate(mode);
  path.require_closed("loop_phase_overlap");
  if (mesh < 8) throw InvalidArgument("overlap mesh must have at least 8 points");
  const ProductPhase fine = overlap_product(mode, path, mesh, gauge);
  const ProductPhase coarse = overlap_product(mode, path, mesh / 2, gauge);
  OverlapPhase out;
  out.phase = wrap_angle(fine.phase);
  out.error_estimate = std::abs(wrap_angle(fine.phase - coarse.phase));
  out.mesh = mesh;
  out.min_overlap = fine.min_overlap;
  return out;
}

CurvatureSample curvature(const Mode& mode, const Geometry& g) {
  require_nondegenerate(mode);
  return {mode.k / (g.l() * g.l()) * std::sin(mode.alpha), g, mode};
}

double stokes_defect(const Mode& mode, const ParameterPath& rect) {
  const auto& bounds = rect.rectangle_bounds();
  if (!bounds) throw InvalidArgument("stokes_defect needs an axis-aligned rectangle path");
  const double line = loop_phase_analytic(mode, rect);
  const QuadratureRule rl = composite_gauss_legendre(bounds->l1, bounds->l2, 4, 16);
  const QuadratureRule rc = composite_gauss_legendre(bounds->c1, bounds->c2, 1, 16);
  double area = 0.0;
  for (std::size_t i = 0; i < rl.size(); ++i)
    for (std::size_t j = 0; j < rc.size(); ++j)
      area += rl.weights[i] * rc.weights[j] *
              curvature(mode, Geometry(rl.nodes[i], rc.nodes[j])).f_lc;
  return std::abs(line - rect.orientation() * area);
}

double commutator_defect(const GridFunction& f) {
  f.validate();
  const std::size_t n = f.nodes.size();
  if (n < 7) throw InvalidArgument("commutator check needs at least 7 grid points");
  const double h = f.nodes[1] - f.nodes[0];
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(f.nodes[i] - f.nodes[i - 1] - h) > 1e-9 * h)
      throw InvalidArgument("commutator check needs a uniform grid");
  double peak = 0.0;
  for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(f.values[i]) > 1e-10 * peak || std::abs(f.values[n - 1 - i]) > 1e-10 * peak)
      throw InvalidArgument("test function support touches the grid boundary");

  const auto& x = f.nodes;
  auto deriv = [&](const std::vector<Complex>& g) {
    std::vector<Complex> d(n, Complex{});
    for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (g[j + 1] - g[j - 1]) / (2.0 * h);
    return d;
  };
  auto momentum = [&](const std::vector<Complex>& g) {
    std::vector<Complex> d = deriv(g);
    for (auto& v : d) v *= -kI;
    return d;
  };
  auto virial = [&](const std::vector<Complex>& g) {
    std::vector<Complex> out = momentum(g);
    for (std::size_t j = 0; j < n; ++j) out[j] = x[j] * out[j] - 0.5 * kI * g[j];
    return out;
  };
  const std::vector<Complex> pf = momentum(f.values);
  const std::vector<Complex> a = virial(pf);
  const std::vector<Complex> b = momentum(virial(f.values));
  double s = 0.0;
  for (std::size_t j = 2; j + 2 < n; ++j) s += h * std::norm(a[j] - b[j] - kI * pf[j]);
  return std::sqrt(s);
}

}  // namespace movwall
