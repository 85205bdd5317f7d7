// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Adiabatic transport of an eta-family level along a closed (l, c) loop.
///
/// The state is carried in the fixed-domain frame chi(u) = l^{1/2} Psi(c + l u)
/// on I = [-1/2, 1/2]. Differentiating this map in time gives
///
///     i d chi/dt = H_eff chi,
///     H_eff = p^2 / (2 m l^2) - (ldot / l) (x o p) - (cdot / l) p,
///
/// with p = -i d/du and x o p = u p - i/2. The operators are represented on a
/// symmetric window of eigenfunctions phi_n, n in [-N, N]. The p and x o p
/// blocks are Hermitian-symmetrised because the eigenfunctions do not lie in
/// their domains for general eta.

#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "movwall/path.hpp"
#include "movwall/spectral.hpp"

namespace movwall {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

/// Modes n = -N, ..., N of one eta.
struct ModeWindow {
  ModeWindow(const EtaParameter& eta, int half_width);

  [[nodiscard]] int half_width() const noexcept { return half_width_; }
  [[nodiscard]] std::size_t size() const noexcept { return modes_.size(); }
  [[nodiscard]] const std::vector<Mode>& modes() const noexcept { return modes_; }
  [[nodiscard]] const EtaParameter& eta() const noexcept { return eta_; }
  /// Position of level n; throws InvalidArgument outside the window.
  [[nodiscard]] std::size_t index_of(int n) const;

 private:
  EtaParameter eta_;
  int half_width_;
  std::vector<Mode> modes_;
};

/// Matrix elements on the fixed interval, independent of (l, c).
struct FixedFrameOperators {
  explicit FixedFrameOperators(const ModeWindow& window);

  ModeWindow window;
  Eigen::VectorXd k;  ///< wavenumbers
  MatrixXc p_raw;     ///< <phi_m | -i phi_n'>
  MatrixXc virial_raw;  ///< <phi_m | (u p - i/2) phi_n>
  MatrixXc p;         ///< Hermitian part of p_raw
  MatrixXc virial;    ///< Hermitian part of virial_raw
};

/// Largest |M - M^dagger| entry.
double hermiticity_defect(const MatrixXc& m);

MatrixXc effective_hamiltonian(const FixedFrameOperators& ops, const Geometry& g, double ldot,
                               double cdot, const MassConvention& mc = {});
MatrixXc effective_hamiltonian(const ModeWindow& window, const Geometry& g, double ldot,
                               double cdot, const MassConvention& mc = {});

/// Closed path traversed in total time T, each segment taking a time
/// proportional to its length; `resolution` midpoint steps in all.
struct Schedule {
  Schedule(ParameterPath path, double T, std::size_t resolution);

  ParameterPath path;
  double T;
  std::size_t resolution;
};

struct PropagationOptions {
  double initial_phase = 0.0;  ///< global phase applied to the initial state
  double fidelity_warning = 0.9;
};

struct PhaseReport {
  double total_phase = 0.0;      ///< Arg <psi(0)|psi(T)>
  double dynamical_phase = 0.0;  ///< -int lambda_n dt, not wrapped
  double geometric_phase = 0.0;  ///< total - dynamical, wrapped to (-pi, pi]
  double fidelity = 0.0;         ///< |<psi(0)|psi(T)>|
  double norm_drift = 0.0;       ///< max | |psi(t)| - 1 |
  bool warning = false;          ///< fidelity below the warning threshold
  /// Largest |<phi_m|H_eff|phi_n>| with m in the window and n just outside,
  /// over the segment midpoints.
  double max_off_window_coupling = 0.0;
};

/// Exponential-midpoint propagation: each step applies exp(-i H dt) with H
/// frozen at the step midpoint, so every step is exactly unitary.
PhaseReport propagate(const Schedule& schedule, int start_mode, const EtaParameter& eta,
                      int half_width, const MassConvention& mc = {},
                      const PropagationOptions& options = {});

}  // namespace movwall
