// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/adiabatic.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "movwall/quadrature.hpp"

namespace movwall {

ModeWindow::ModeWindow(const EtaParameter& eta, int half_width)
    : eta_(eta), half_width_(half_width) {
  if (half_width < 0) throw InvalidArgument("mode window half-width must be non-negative");
  if (eta.is_degenerate())
    throw SingularParameter("adiabatic transport needs a nondegenerate eta (eta != +-1)");
  for (int n = -half_width; n <= half_width; ++n) modes_.push_back(make_mode(n, eta));
}

std::size_t ModeWindow::index_of(int n) const {
  if (n < -half_width_ || n > half_width_) throw InvalidArgument("level outside the mode window");
  return static_cast<std::size_t>(n + half_width_);
}

namespace {

struct RawBlocks {
  MatrixXc p;
  MatrixXc virial;
};

RawBlocks raw_blocks(const std::vector<Mode>& rows, const std::vector<Mode>& cols) {
  double kmax = 0.0;
  for (const auto& m : rows) kmax = std::max(kmax, std::abs(m.k));
  for (const auto& m : cols) kmax = std::max(kmax, std::abs(m.k));
  const QuadratureRule rule = oscillatory_rule(-0.5, 0.5, 2.0 * kmax);
  const auto nr = static_cast<Eigen::Index>(rows.size());
  const auto nc = static_cast<Eigen::Index>(cols.size());
  MatrixXc f(static_cast<Eigen::Index>(rule.size()), nr);
  MatrixXc g(static_cast<Eigen::Index>(rule.size()), nc);
  MatrixXc dg(static_cast<Eigen::Index>(rule.size()), nc);
  MatrixXc udg(static_cast<Eigen::Index>(rule.size()), nc);
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto iq = static_cast<Eigen::Index>(q);
    const double u = rule.nodes[q];
    const double w = rule.weights[q];
    for (Eigen::Index i = 0; i < nr; ++i)
      f(iq, i) = w * std::conj(eigenfunction_fixed(rows[static_cast<std::size_t>(i)], u));
    for (Eigen::Index j = 0; j < nc; ++j) {
      const Mode& m = cols[static_cast<std::size_t>(j)];
      g(iq, j) = eigenfunction_fixed(m, u);
      dg(iq, j) = eigenfunction_fixed_d1(m, u);
      udg(iq, j) = u * dg(iq, j);
    }
  }
  const MatrixXc ft = f.transpose();
  RawBlocks out;
  out.p = -kI * (ft * dg);
  out.virial = -kI * (ft * udg) - 0.5 * kI * (ft * g);
  return out;
}

MatrixXc hermitian_part(const MatrixXc& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

FixedFrameOperators::FixedFrameOperators(const ModeWindow& w) : window(w) {
  const auto& modes = window.modes();
  k.resize(static_cast<Eigen::Index>(modes.size()));
  for (std::size_t i = 0; i < modes.size(); ++i) k(static_cast<Eigen::Index>(i)) = modes[i].k;
  RawBlocks raw = raw_blocks(modes, modes);
  p_raw = std::move(raw.p);
  virial_raw = std::move(raw.virial);
  p = hermitian_part(p_raw);
  virial = hermitian_part(virial_raw);
}

double hermiticity_defect(const MatrixXc& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

MatrixXc effective_hamiltonian(const FixedFrameOperators& ops, const Geometry& g, double ldot,
                               double cdot, const MassConvention& mc) {
  const double l = g.l();
  MatrixXc h = -(ldot / l) * ops.virial - (cdot / l) * ops.p;
  h.diagonal() += (ops.k.array().square() / (2.0 * mc.mass() * l * l)).matrix().cast<Complex>();
  return h;
}

MatrixXc effective_hamiltonian(const ModeWindow& window, const Geometry& g, double ldot,
                               double cdot, const MassConvention& mc) {
  return effective_hamiltonian(FixedFrameOperators(window), g, ldot, cdot, mc);
}

Schedule::Schedule(ParameterPath p, double total_time, std::size_t steps)
    : path(std::move(p)), T(total_time), resolution(steps) {
  path.require_closed("Schedule");
  if (!(T > 0.0)) throw InvalidArgument("traversal time T must be positive");
  if (resolution < 100) throw InvalidArgument("schedule resolution must be at least 100 steps");
}

namespace {

// Couplings between the window and the four levels beyond each edge.
double off_window_coupling(const ModeWindow& window, const Schedule& s,
                           const std::vector<double>& durations) {
  std::vector<Mode> outside;
  const int n = window.half_width();
  for (int j = 1; j <= 4; ++j) {
    outside.push_back(make_mode(n + j, window.eta()));
    outside.push_back(make_mode(-n - j, window.eta()));
  }
  const RawBlocks raw = raw_blocks(window.modes(), outside);
  const RawBlocks back = raw_blocks(outside, window.modes());
  const MatrixXc p = 0.5 * (raw.p + back.p.adjoint());
  const MatrixXc x = 0.5 * (raw.virial + back.virial.adjoint());
  double worst = 0.0;
  const auto& segs = s.path.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (durations[i] <= 0.0) continue;
    const ParamPoint at = segs[i].at(0.5);
    const ParamPoint v = segs[i].velocity(0.5);
    const double ldot = v.l / durations[i];
    const double cdot = v.c / durations[i];
    const MatrixXc c = -(ldot / at.l) * x - (cdot / at.l) * p;
    worst = std::max(worst, c.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

PhaseReport propagate(const Schedule& schedule, int start_mode, const EtaParameter& eta,
                      int half_width, const MassConvention& mc, const PropagationOptions& options) {
  const ModeWindow window(eta, half_width);
  const std::size_t start = window.index_of(start_mode);
  const FixedFrameOperators ops(window);
  const Mode& level = window.modes()[start];

  const auto& segs = schedule.path.segments();
  std::vector<double> lengths;
  for (const auto& seg : segs) lengths.push_back(seg.length);
  const double total_length = schedule.path.length();
  std::vector<double> durations(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i)
    durations[i] = total_length > 0.0 ? schedule.T * lengths[i] / total_length
                                      : schedule.T / static_cast<double>(segs.size());
  std::vector<std::size_t> steps =
      apportion(total_length > 0.0 ? lengths : std::vector<double>(segs.size(), 1.0),
                schedule.resolution);
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (durations[i] > 0.0 && steps[i] == 0) steps[i] = 1;

  const auto dim = static_cast<Eigen::Index>(window.size());
  VectorXc psi = VectorXc::Zero(dim);
  psi(static_cast<Eigen::Index>(start)) = std::polar(1.0, options.initial_phase);
  const VectorXc psi0 = psi;

  PhaseReport report;
  double integrated_energy = 0.0;
  MatrixXc step_matrix;
  double cached_l = -1.0, cached_ldot = 0.0, cached_cdot = 0.0, cached_dt = -1.0;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (steps[s] == 0 || durations[s] <= 0.0) continue;
    const double dt = durations[s] / static_cast<double>(steps[s]);
    for (std::size_t i = 0; i < steps[s]; ++i) {
      const double tau = (static_cast<double>(i) + 0.5) / static_cast<double>(steps[s]);
      const ParamPoint at = segs[s].at(tau);
      const ParamPoint v = segs[s].velocity(tau);
      const double ldot = v.l / durations[s];
      const double cdot = v.c / durations[s];
      // H_eff does not depend on c, so constant-l stretches reuse one step.
      if (at.l != cached_l || ldot != cached_ldot || cdot != cached_cdot || dt != cached_dt) {
        const MatrixXc h = effective_hamiltonian(ops, Geometry(at.l, at.c), ldot, cdot, mc);
        Eigen::SelfAdjointEigenSolver<MatrixXc> es(h);
        const VectorXc phases = (-kI * dt * es.eigenvalues().cast<Complex>()).array().exp();
        step_matrix = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
        cached_l = at.l;
        cached_ldot = ldot;
        cached_cdot = cdot;
        cached_dt = dt;
      }
      psi = step_matrix * psi;
      integrated_energy += eigenvalue(level, Geometry(at.l, at.c), mc) * dt;
      report.norm_drift = std::max(report.norm_drift, std::abs(psi.norm() - 1.0));
    }
  }

  const Complex overlap = psi0.dot(psi);
  report.fidelity = std::min(1.0, std::abs(overlap));
  report.total_phase = std::arg(overlap);
  report.dynamical_phase = -integrated_energy;
  report.geometric_phase = wrap_angle(report.total_phase + integrated_energy);
  report.warning = report.fidelity < options.fidelity_warning;
  report.max_off_window_coupling = off_window_coupling(window, schedule, durations);
  return report;
}

}  // namespace movwall
