// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Berry connection, curvature and loop phases of a nondegenerate level.
///
/// The embedded eigenfunctions psi_n(x; l, c) are not differentiable in the
/// parameters as elements of L^2(R) because of the walls. Three independent
/// finite prescriptions are provided:
///
///  - interior: parameter derivatives of the smooth global extension,
///    integrated over the open box only;
///  - mollified: the extension multiplied by a normalised smooth cutoff
///    chi_eps that equals 1 on the box and decays over a collar of width eps;
///  - overlap: the gauge-invariant discrete product of overlaps of the hard
///    wall states around the loop.
///
/// Sign conventions: ConnectionSample stores Im<psi|d psi>; the Berry one-form
/// is A = i<psi|d psi> = -(a_l dl + a_c dc) and the loop phase is
/// Phi = oint A. Curvature is the dl^dc coefficient of dA.

#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "movwall/path.hpp"
#include "movwall/spectral.hpp"

namespace movwall {

/// Smooth monotone cutoff rho on [0, inf) with rho(0) = 1, rho(t >= 1) = 0 and
/// every derivative vanishing at 0.
class Mollifier {
 public:
  explicit Mollifier(std::function<double(double)> evaluator) : f_(std::move(evaluator)) {}

  /// rho(t) = f(1 - t) / (f(t) + f(1 - t)) with f(t) = exp(-1/t) for t > 0.
  static Mollifier smooth_step();

  double operator()(double t) const { return f_(t); }

 private:
  std::function<double(double)> f_;
};

struct ConnectionSample {
  double a_l = 0.0;  ///< Im<psi|d_l psi>
  double a_c = 0.0;  ///< Im<psi|d_c psi>
  Geometry geometry;
  Mode mode;
};

struct CurvatureSample {
  double f_lc = 0.0;  ///< coefficient of dl ^ dc
  Geometry geometry;
  Mode mode;
};

/// a_l = 0, a_c = (k/l) sin(alpha).
ConnectionSample connection_analytic(const Mode& mode, const Geometry& g);

/// Default parameter step for the interior prescription, relative to l.
inline constexpr double kInteriorRelativeStep = 1e-4;

/// Interior prescription with a five-point central difference of step h in
/// each parameter. Throws InvalidArgument when h >= l/2.
ConnectionSample connection_interior(const Mode& mode, const Geometry& g, double h);
ConnectionSample connection_interior(const Mode& mode, const Geometry& g);

/// Mollified prescription at collar width eps.
ConnectionSample connection_mollified(const Mode& mode, const Geometry& g, const Mollifier& rho,
                                      double eps);

/// Mollified connection over a sequence of collar widths and its eps -> 0
/// extrapolation.
struct MollifiedSeries {
  std::vector<double> eps;
  std::vector<ConnectionSample> samples;
  ConnectionSample extrapolated;
  /// Fitted leading power of the eps-dependence per component; +inf when the
  /// sequence is constant to rounding (no eps dependence to fit).
  double order_l = std::numeric_limits<double>::infinity();
  double order_c = std::numeric_limits<double>::infinity();
};

/// Richardson estimate of lim_{h->0} v(h) from the last three samples of a
/// strictly decreasing h sequence, with the fitted leading power. A sequence
/// constant to rounding yields order +inf and its last value.
struct Extrapolation {
  double value = 0.0;
  double order = std::numeric_limits<double>::infinity();
};
Extrapolation richardson_extrapolate(const std::vector<double>& h, const std::vector<double>& v);

/// Default collar widths relative to l.
std::vector<double> default_eps_list(const Geometry& g);

MollifiedSeries mollified_extrapolation(const Mode& mode, const Geometry& g, const Mollifier& rho,
                                        const std::vector<double>& eps_list);

/// Line integral of A = -(a_l dl + a_c dc) around the path for an arbitrary
/// connection field.
double loop_phase(const ParameterPath& path,
                  const std::function<ConnectionSample(const Geometry&)>& connection,
                  std::size_t nodes_per_segment = 24);

/// Phi = oint A with the analytic connection. For the counterclockwise
/// rectangle [l1, l2] x [c1, c2] this is k (1/l1 - 1/l2)(c2 - c1) sin(alpha).
double loop_phase_analytic(const Mode& mode, const ParameterPath& path);

struct OverlapPhase {
  double phase = 0.0;
  double error_estimate = 0.0;  ///< |Phi(mesh) - Phi(mesh/2)|
  std::size_t mesh = 0;
  double min_overlap = 1.0;
};

/// Optional gauge: state j is multiplied by exp(i gauge(j)).
using Gauge = std::function<double(std::size_t)>;

/// Phi = -Arg prod_j <psi(p_j)|psi(p_{j+1})> over `mesh` points of the path.
/// Throws ConvergenceError when an overlap modulus drops below 1e-6.
OverlapPhase loop_phase_overlap(const Mode& mode, const ParameterPath& path, std::size_t mesh,
                                const Gauge& gauge = {});

/// f_lc = (k / l^2) sin(alpha).
CurvatureSample curvature(const Mode& mode, const Geometry& g);

/// |oint A - iint F dl dc| for an axis-aligned rectangle path, both sides by
/// Gauss-Legendre quadrature.
double stokes_defect(const Mode& mode, const ParameterPath& rect);

/// Grid norm of ((x o p) p - p (x o p) - i p) f with second-order central
/// differences on a uniform grid; x o p = x p - i/2. Throws InvalidArgument
/// if f does not vanish near both grid ends.
double commutator_defect(const GridFunction& f);

}  // namespace movwall
