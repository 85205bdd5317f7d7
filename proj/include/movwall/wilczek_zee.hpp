// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Matrix-valued connection of the doubly degenerate levels at eta = +-1.
///
/// In the real basis psi_I, psi_II (cosine and sine on the box) the connection
/// A_ab = i<psi_a|d psi_b> has a single component A_c = (k/l) sigma_2, so every
/// increment is proportional to one fixed matrix and the holonomy lies in the
/// one-parameter group exp(i theta sigma_2).

#pragma once

#include <array>
#include <cstddef>

#include "movwall/bc_core.hpp"
#include "movwall/path.hpp"

namespace movwall {

struct MatrixConnection {
  Mat2 coeff_l = Mat2::Zero();
  Mat2 coeff_c = Mat2::Zero();
  Geometry geometry;
  int eta_sign = 1;
  int n = 1;
  double k = 0.0;  ///< wavenumber on the unit interval
};

/// Coefficient of dl ^ dc in F = dA - i A ^ A, split into its two terms.
struct MatrixCurvature {
  Mat2 exterior;     ///< dA
  Mat2 commutator;   ///< -i [A_l, A_c]
  Mat2 total;
};

struct Holonomy {
  Mat2 matrix = Mat2::Identity();
  std::array<double, 2> eigenphases{0.0, 0.0};  ///< descending, in (-pi, pi]
  std::size_t mesh = 0;
  double err_estimate = 0.0;  ///< largest eigenphase change against mesh / 2
};

struct PlaneWaveFrame {
  Mat2 basis_change;  ///< columns: (psi_I + i psi_II)/sqrt 2, (psi_I - i psi_II)/sqrt 2
  Mat2 diagonal_l;
  Mat2 diagonal_c;
  double off_diagonal = 0.0;  ///< largest off-diagonal modulus after conjugation
};

/// Closed form. Throws SingularParameter unless eta = +-1.
MatrixConnection wz_connection(const EtaParameter& eta, int n, const Geometry& g);

/// Same quantity from the interior prescription: five-point parameter
/// differences of the extended basis integrated over the box.
MatrixConnection wz_connection_interior(const EtaParameter& eta, int n, const Geometry& g,
                                        double h);
MatrixConnection wz_connection_interior(const EtaParameter& eta, int n, const Geometry& g);

MatrixCurvature wz_curvature(const EtaParameter& eta, int n, const Geometry& g);

/// Ordered product of exp(i A(midpoint) . dp) over `mesh` steps of a closed
/// path, later steps multiplying from the left. Requires mesh >= 8.
Holonomy wz_holonomy(const EtaParameter& eta, int n, const ParameterPath& path, std::size_t mesh);

PlaneWaveFrame diagonalize_in_plane_waves(const MatrixConnection& conn);

/// exp(i a) for Hermitian a.
Mat2 exp_i_hermitian(const Mat2& a);

}  // namespace movwall
