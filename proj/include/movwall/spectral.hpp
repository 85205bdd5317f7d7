// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Spectrum of the eta-family on the reference interval I = [-1/2, 1/2] and
/// its transport to the physical box I_{l,c} by psi(x) = l^{-1/2} phi((x-c)/l).
///
/// For eta != +-1 the normalised eigenfunctions are
///
///     phi_n(x) = sin(k_n x) + e^{i alpha} cos(k_n x),
///     alpha = Arg((1 + eta)/(1 - eta)),
///     k_n = 2 n pi + 2 arctan|(1 - eta)/(1 + eta)|,   n in Z,
///
/// with energies lambda_n = k_n^2 / (2 m l^2).

#pragma once

#include <utility>
#include <vector>

#include "movwall/bc_core.hpp"
#include "movwall/common.hpp"

namespace movwall {

/// One nondegenerate level of the eta-family.
struct Mode {
  int n = 0;
  double k = 0.0;      ///< wavenumber on the unit interval
  double alpha = 0.0;  ///< phase angle in (-pi, pi]
  EtaParameter eta;
};

struct EigenLevel {
  Mode mode;
  double lambda = 0.0;
  Geometry geometry;
  MassConvention mass;
};

/// Samples of a function on an ordered grid with quadrature weights.
struct GridFunction {
  std::vector<double> nodes;
  std::vector<Complex> values;
  std::vector<double> weights;

  /// Throws InvalidArgument unless nodes are strictly increasing (at least
  /// two) and weights positive with matching sizes.
  void validate() const;
  [[nodiscard]] double norm() const;
  /// Uniform grid on [a, b] with trapezoidal weights.
  static GridFunction uniform(double a, double b, std::size_t count);
};

/// Arg((1 + eta)/(1 - eta)); throws SingularParameter for eta = 1.
double alpha_of(const EtaParameter& eta);

/// k_n; throws SingularParameter for eta = +-1.
double wavenumber(int n, const EtaParameter& eta);

Mode make_mode(int n, const EtaParameter& eta);

/// phi_n on the reference interval, evaluated from the closed form. The
/// formula is entire in x; outside [-1/2, 1/2] this is the smooth extension.
Complex eigenfunction_fixed(const Mode& mode, double x);
Complex eigenfunction_fixed_d1(const Mode& mode, double x);
Complex eigenfunction_fixed_d2(const Mode& mode, double x);

/// l^{-1/2} phi((x - c)/l) without truncation (the smooth global extension).
Complex eigenfunction_extended(const Mode& mode, const Geometry& g, double x);

/// l^{-1/2} phi((x - c)/l) on I_{l,c}, zero outside.
Complex eigenfunction_physical(const Mode& mode, const Geometry& g, double x);

/// Endpoint data of phi_n on [-1/2, 1/2].
BoundaryData endpoint_data(const Mode& mode);
/// Endpoint data of the physical eigenfunction on I_{l,c}.
BoundaryData endpoint_data(const Mode& mode, const Geometry& g);

double eigenvalue(const Mode& mode, const Geometry& g, const MassConvention& mc = {});

EigenLevel make_level(const Mode& mode, const Geometry& g, const MassConvention& mc = {});

/// Orthonormal pair spanning a degenerate eigenspace of eta = +-1:
/// sqrt(2) (cos(k x), sin(k x)) with k = 2 pi n (eta = 1, n >= 1) or
/// (2n + 1) pi (eta = -1, n >= 0).
struct DegenerateBasis {
  int eta_sign = 1;
  int n = 1;
  double k = 0.0;

  [[nodiscard]] std::pair<double, double> operator()(double x) const;
  [[nodiscard]] std::pair<double, double> derivative(double x) const;
};

DegenerateBasis make_degenerate_basis(int eta_sign, int n);

/// Returns (phi_I(x), phi_II(x)).
std::pair<double, double> degenerate_basis(int eta_sign, int n, double x);

/// Level found by the generic solver for an arbitrary boundary unitary.
struct GenericLevel {
  double lambda = 0.0;
  /// Signed dimensionless wavenumber: kappa l for lambda > 0, -kappa l for
  /// bound states below zero.
  double scaled_wavenumber = 0.0;
  int multiplicity = 1;
  GridFunction eigenfunction;  ///< on the physical interval, unit norm
};

struct GenericSpectrumOptions {
  /// Bracket step in kappa l on the oscillatory branch.
  double bracket_step = kPi / 32.0;
  /// Largest kappa l scanned on the hyperbolic (negative-energy) branch.
  double max_hyperbolic = 1.0e4;
  /// Hard cap on the scanned kappa l before reporting non-convergence.
  double max_scaled_wavenumber = 1.0e5;
  std::size_t eigenfunction_nodes_per_panel = 16;
};

/// Lowest `count` eigenvalues (with multiplicity, ascending) of
/// -(1/2m) d^2/dx^2 on I_{l,c} with boundary condition U, from the roots of
/// the determinant of the boundary condition applied to the general solution.
std::vector<GenericLevel> generic_spectrum(const BoundaryUnitary& u, int count,
                                           const MassConvention& mc = {},
                                           const Geometry& g = {},
                                           const GenericSpectrumOptions& options = {});

/// Real secular function whose zeros in the signed scaled wavenumber are the
/// eigenvalues (exposed for diagnostics and tests).
double secular_function(const BoundaryUnitary& u, const Geometry& g, double scaled_wavenumber);

}  // namespace movwall
