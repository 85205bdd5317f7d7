// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/wilczek_zee.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "movwall/berry.hpp"
#include "movwall/quadrature.hpp"
#include "movwall/spectral.hpp"

namespace movwall {

namespace {

DegenerateBasis basis_for(const EtaParameter& eta, int n) {
  if (!eta.is_degenerate())
    throw SingularParameter("the matrix connection needs a degenerate level (eta = +-1)");
  return make_degenerate_basis(eta.degenerate_sign(), n);
}

std::array<double, 2> extended_basis(const DegenerateBasis& b, double l, double c, double x) {
  const auto [f1, f2] = b((x - c) / l);
  const double s = 1.0 / std::sqrt(l);
  return {s * f1, s * f2};
}

}  // namespace

MatrixConnection wz_connection(const EtaParameter& eta, int n, const Geometry& g) {
  const DegenerateBasis b = basis_for(eta, n);
  MatrixConnection out;
  out.coeff_c = (b.k / g.l()) * pauli_y();
  out.geometry = g;
  out.eta_sign = b.eta_sign;
  out.n = n;
  out.k = b.k;
  return out;
}

MatrixConnection wz_connection_interior(const EtaParameter& eta, int n, const Geometry& g,
                                        double h) {
  const DegenerateBasis b = basis_for(eta, n);
  if (!(h > 0.0) || h >= 0.5 * g.l())
    throw InvalidArgument("parameter step must lie in (0, l/2)");
  const double l = g.l();
  const double c = g.c();
  auto five_point = [h](auto&& f) {
    const auto p2 = f(2.0 * h), p1 = f(h), m1 = f(-h), m2 = f(-2.0 * h);
    std::array<double, 2> d{};
    for (int i = 0; i < 2; ++i) d[i] = (-p2[i] + 8.0 * p1[i] - 8.0 * m1[i] + m2[i]) / (12.0 * h);
    return d;
  };
  const QuadratureRule rule = oscillatory_rule(g.left(), g.right(), b.k / (l - 2.0 * h));
  Eigen::Matrix2d ml = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d mc = Eigen::Matrix2d::Zero();
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double x = rule.nodes[q];
    const auto psi = extended_basis(b, l, c, x);
    const auto dl = five_point([&](double d) { return extended_basis(b, l + d, c, x); });
    const auto dc = five_point([&](double d) { return extended_basis(b, l, c + d, x); });
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        ml(i, j) += rule.weights[q] * psi[i] * dl[j];
        mc(i, j) += rule.weights[q] * psi[i] * dc[j];
      }
  }
  // The box moves with the parameters, so <psi_a|d psi_b> has a symmetric
  // part from the moving endpoints; only the antisymmetric part is a connection.
  MatrixConnection out;
  out.coeff_l = kI * (0.5 * (ml - ml.transpose())).cast<Complex>();
  out.coeff_c = kI * (0.5 * (mc - mc.transpose())).cast<Complex>();
  out.geometry = g;
  out.eta_sign = b.eta_sign;
  out.n = n;
  out.k = b.k;
  return out;
}

MatrixConnection wz_connection_interior(const EtaParameter& eta, int n, const Geometry& g) {
  return wz_connection_interior(eta, n, g, kInteriorRelativeStep * g.l());
}

MatrixCurvature wz_curvature(const EtaParameter& eta, int n, const Geometry& g) {
  const MatrixConnection a = wz_connection(eta, n, g);
  MatrixCurvature f;
  // d(k/l sigma_2 dc) = -(k/l^2) sigma_2 dl ^ dc
  f.exterior = -(a.k / (g.l() * g.l())) * pauli_y();
  f.commutator = -kI * (a.coeff_l * a.coeff_c - a.coeff_c * a.coeff_l);
  f.total = f.exterior + f.commutator;
  return f;
}

Mat2 exp_i_hermitian(const Mat2& a) {
  const Mat2 h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat2> es(h);
  const Eigen::Vector2cd phases =
      es.eigenvalues().unaryExpr([](double v) { return std::polar(1.0, v); }).cast<Complex>();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

Mat2 ordered_product(const EtaParameter& eta, int n, const ParameterPath& path, std::size_t mesh) {
  const std::vector<ParamPoint> pts = path.discretize(mesh);
  Mat2 u = Mat2::Identity();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const ParamPoint& p = pts[j];
    const ParamPoint& q = pts[(j + 1) % pts.size()];
    const Geometry mid(0.5 * (p.l + q.l), 0.5 * (p.c + q.c));
    const MatrixConnection a = wz_connection(eta, n, mid);
    u = exp_i_hermitian(a.coeff_l * (q.l - p.l) + a.coeff_c * (q.c - p.c)) * u;
  }
  return u;
}

std::array<double, 2> eigenphases_of(const Mat2& u) {
  Eigen::ComplexEigenSolver<Mat2> es(u);
  std::array<double, 2> ph{wrap_angle(std::arg(es.eigenvalues()(0))),
                           wrap_angle(std::arg(es.eigenvalues()(1)))};
  std::sort(ph.begin(), ph.end(), std::greater<>());
  return ph;
}

}  // namespace

Holonomy wz_holonomy(const EtaParameter& eta, int n, const ParameterPath& path, std::size_t mesh) {
  basis_for(eta, n);
  path.require_closed("wz_holonomy");
  if (mesh < 8) throw InvalidArgument("holonomy mesh must have at least 8 points");
  Holonomy h;
  h.matrix = ordered_product(eta, n, path, mesh);
  h.eigenphases = eigenphases_of(h.matrix);
  h.mesh = mesh;
  const auto coarse = eigenphases_of(ordered_product(eta, n, path, mesh / 2));
  for (int i = 0; i < 2; ++i)
    h.err_estimate = std::max(h.err_estimate, std::abs(wrap_angle(h.eigenphases[i] - coarse[i])));
  return h;
}

PlaneWaveFrame diagonalize_in_plane_waves(const MatrixConnection& conn) {
  PlaneWaveFrame f;
  const double s = 1.0 / std::sqrt(2.0);
  f.basis_change << s, s, kI * s, -kI * s;
  f.diagonal_l = f.basis_change.adjoint() * conn.coeff_l * f.basis_change;
  f.diagonal_c = f.basis_change.adjoint() * conn.coeff_c * f.basis_change;
  f.off_diagonal = std::max({std::abs(f.diagonal_l(0, 1)), std::abs(f.diagonal_l(1, 0)),
                             std::abs(f.diagonal_c(0, 1)), std::abs(f.diagonal_c(1, 0))});
  return f;
}

}  // namespace movwall
