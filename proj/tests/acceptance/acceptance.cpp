// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Every tolerance and runtime limit is pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "movwall/adiabatic.hpp"
#include "movwall/bc_core.hpp"
#include "movwall/berry.hpp"
#include "movwall/spectral.hpp"
#include "movwall/wilczek_zee.hpp"

using namespace movwall;

namespace {

constexpr double kRoundTripTol = 1e-10;
constexpr double kTripleTol = 1e-12;
constexpr double kSpectrumTol = 1e-9;
constexpr double kInteriorTol = 1e-6;
constexpr double kMollifiedTol = 1e-4;
constexpr double kLoopTol = 1e-3;
constexpr double kRatioLimit = 0.6;
constexpr double kConvergedError = 1e-12;
constexpr double kRealEtaTol = 1e-4;
constexpr double kStokesTol = 1e-8;
constexpr double kRatioExactTol = 1e-13;
constexpr double kHolonomyTol = 1e-6;
constexpr double kOrthogonalTol = 1e-10;
constexpr double kOffDiagonalTol = 1e-12;
constexpr double kFinalAdiabaticTol = 0.01 * kPi / 4;
constexpr double kFidelityMin = 0.99;
constexpr double kOrderLow = 1.8;
constexpr double kOrderHigh = 2.2;

const std::vector<Complex> kEtaGrid{{0, 1}, {0, 0}, {0.5, 0}, {0, 2}, {-0.3, 0.4}};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

Outcome criterion1() {
  Outcome o;
  Mat2 sx = pauli_x();
  o.require(BoundaryUnitary::dirichlet().matrix() == Mat2(-Mat2::Identity()), "Dirichlet is not -I");
  o.require(BoundaryUnitary::neumann().matrix() == Mat2(Mat2::Identity()), "Neumann is not I");
  o.require(BoundaryUnitary::periodic().matrix() == sx, "periodic is not sigma_1");
  o.require(BoundaryUnitary::antiperiodic().matrix() == Mat2(-sx), "antiperiodic is not -sigma_1");
  o.require(eta_to_unitary(EtaParameter(1.0)).matrix() == sx, "eta = 1 is not sigma_1");
  o.require(eta_to_unitary(EtaParameter(-1.0)).matrix() == Mat2(-sx), "eta = -1 is not -sigma_1");
  o.require(classify_unitary(BoundaryUnitary::dirichlet()).kind == BcKind::Dirichlet, "Dirichlet misclassified");
  o.require(classify_unitary(BoundaryUnitary::neumann()).kind == BcKind::Neumann, "Neumann misclassified");
  o.require(classify_unitary(BoundaryUnitary::periodic()).kind == BcKind::Periodic, "periodic misclassified");
  o.require(classify_unitary(BoundaryUnitary::antiperiodic()).kind == BcKind::Antiperiodic,
            "antiperiodic misclassified");

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> logr(-2.0, 2.0), ang(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex eta = std::polar(std::pow(10.0, logr(rng)), ang(rng));
    const Classification c = classify_unitary(eta_to_unitary(EtaParameter(eta)));
    if (!c.eta || c.eta->is_infinite()) {
      worst = 1.0;
      continue;
    }
    worst = std::max(worst, std::abs(c.eta->value() - eta) / std::max(1.0, std::abs(eta)));
  }
  o.require(worst < kRoundTripTol, "round trip error " + fmt("%.3e", worst));
  o.detail = o.pass ? "named cases exact, round trip error " + fmt("%.2e", worst) : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::normal_distribution<double> d(0.0, 1.0);
  auto z = [&] { return Complex(d(rng), d(rng)); };
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const BoundaryData psi{z(), z(), z(), z()};
    const BoundaryData phi{z(), z(), z(), z()};
    worst = std::max(worst, triple_identity_defect(psi, phi));
  }
  o.require(worst < kTripleTol, "defect " + fmt("%.3e", worst));
  if (o.pass) o.detail = "max defect " + fmt("%.2e", worst) + " over 1000 pairs";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Mode m = make_mode(0, EtaParameter(Complex(0, 1)));
  o.require(std::abs(m.k - kPi / 2) < 1e-15, "k0 != pi/2");
  const double lam = eigenvalue(m, Geometry(1.0, 0.0), MassConvention(1.0));
  o.require(std::abs(lam - kPi * kPi / 8) < 1e-14, "lambda0 != pi^2/8");
  o.require(std::abs(lam - 1.23370055) < 5e-9, "lambda0 != 1.23370055");

  double worst = 0.0;
  for (const Complex eta : kEtaGrid) {
    const EtaParameter e(eta);
    std::vector<double> closed;
    for (int n = -4; n <= 4; ++n) closed.push_back(eigenvalue(make_mode(n, e), Geometry()));
    // Every closed-form level must be found among the generic roots.
    std::vector<double> all;
    for (int n = -8; n <= 8; ++n) all.push_back(eigenvalue(make_mode(n, e), Geometry()));
    std::sort(all.begin(), all.end());
    const double top = *std::max_element(closed.begin(), closed.end());
    const int count = static_cast<int>(std::upper_bound(all.begin(), all.end(), top * (1 + 1e-12)) - all.begin());
    const auto levels = generic_spectrum(eta_to_unitary(e), count);
    for (double lc : closed) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& lv : levels) best = std::min(best, std::abs(lv.lambda - lc) / std::abs(lc));
      worst = std::max(worst, best);
    }
  }
  o.require(worst < kSpectrumTol, "generic vs closed form " + fmt("%.3e", worst));
  const auto dir = generic_spectrum(BoundaryUnitary::dirichlet(), 6);
  double dworst = 0.0;
  for (int j = 1; j <= 6; ++j)
    dworst = std::max(dworst, std::abs(dir[j - 1].lambda - j * j * kPi * kPi / 2) / (j * j * kPi * kPi / 2));
  o.require(dworst < kSpectrumTol, "Dirichlet " + fmt("%.3e", dworst));
  if (o.pass) o.detail = "lambda0 = " + fmt("%.8f", lam) + ", generic rel err " + fmt("%.2e", worst);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Mollifier rho = Mollifier::smooth_step();
  double wi = 0.0, wm = 0.0;
  for (const Complex eta : kEtaGrid)
    for (int n = -4; n <= 4; ++n)
      for (double l : {0.5, 1.0, 2.0}) {
        const Mode m = make_mode(n, EtaParameter(eta));
        const Geometry g(l, 0.0);
        const double ac = m.k / l * std::sin(m.alpha);
        const auto in = connection_interior(m, g);
        wi = std::max({wi, std::abs(in.a_c - ac), std::abs(in.a_l)});
        const auto mol = mollified_extrapolation(m, g, rho, default_eps_list(g)).extrapolated;
        wm = std::max({wm, std::abs(mol.a_c - ac), std::abs(mol.a_l)});
      }
  o.require(wi < kInteriorTol, "interior " + fmt("%.3e", wi));
  o.require(wm < kMollifiedTol, "mollified " + fmt("%.3e", wm));
  if (o.pass) o.detail = "interior " + fmt("%.2e", wi) + ", mollified " + fmt("%.2e", wm);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto rect = ParameterPath::rectangle(1.0, 2.0, 0.0, 1.0);
  const Mode m = make_mode(0, EtaParameter(Complex(0, 1)));
  const double exact = loop_phase_analytic(m, rect);
  o.require(std::abs(std::abs(exact) - kPi / 4) < 1e-14, "analytic phase not pi/4");
  std::vector<double> errors;
  double finest = 0.0;
  for (std::size_t mesh : {256u, 512u, 1024u, 2048u}) {
    const OverlapPhase ov = loop_phase_overlap(m, rect, mesh);
    errors.push_back(std::abs(wrap_angle(ov.phase - exact)));
    finest = ov.phase;
  }
  o.require(std::abs(std::abs(finest) - kPi / 4) < kLoopTol, "overlap phase " + fmt("%.9f", finest));
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const bool converged = errors[i] <= kConvergedError;
    o.require(converged || errors[i] / errors[i - 1] <= kRatioLimit,
              "mesh-halving ratio " + fmt("%.3f", errors[i] / errors[i - 1]));
  }
  double wreal = 0.0;
  for (double eta : {0.0, 0.5, -2.0})
    wreal = std::max(wreal, std::abs(loop_phase_overlap(make_mode(0, EtaParameter(eta)), rect, 2048).phase));
  o.require(wreal < kRealEtaTol, "real eta phase " + fmt("%.3e", wreal));
  if (o.pass)
    o.detail = "Phi = " + fmt("%.9f", finest) + ", finest error " + fmt("%.2e", errors.back()) +
               ", real eta max " + fmt("%.2e", wreal);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ul(0.2, 4.0), uc(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    double l1 = ul(rng), l2 = ul(rng), c1 = uc(rng), c2 = uc(rng);
    if (l1 > l2) std::swap(l1, l2);
    if (c1 > c2) std::swap(c1, c2);
    const Mode m = make_mode(i % 5 - 2, EtaParameter(kEtaGrid[static_cast<std::size_t>(i) % kEtaGrid.size()]));
    worst = std::max(worst, stokes_defect(m, ParameterPath::rectangle(l1, l2, c1, c2)));
  }
  o.require(worst < kStokesTol, "Stokes defect " + fmt("%.3e", worst));
  const Mode m = make_mode(1, EtaParameter(Complex(-0.3, 0.4)));
  double rworst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const Geometry g(0.5 + 0.5 * i, -1.0 + 0.5 * j);
      const double ratio = curvature(m, g).f_lc * g.l() * g.l() / (m.k * std::sin(m.alpha));
      rworst = std::max(rworst, std::abs(ratio - 1.0));
    }
  o.require(rworst < kRatioExactTol, "density ratio " + fmt("%.3e", rworst));
  if (o.pass) o.detail = "max Stokes defect " + fmt("%.2e", worst) + ", ratio defect " + fmt("%.2e", rworst);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto rect = ParameterPath::rectangle(1.0, 2.0, 0.0, 1.0);
  const Holonomy h = wz_holonomy(EtaParameter(1.0), 1, rect, 2048);
  const double dev = max_abs(h.matrix + Mat2::Identity());
  o.require(dev < kHolonomyTol, "holonomy deviation " + fmt("%.3e", dev));
  o.require(std::abs(std::abs(h.eigenphases[0]) - kPi) < kHolonomyTol &&
                std::abs(std::abs(h.eigenphases[1]) - kPi) < kHolonomyTol,
            "eigenphases not +-pi");
  const Eigen::Matrix2d re = h.matrix.real();
  const double orth = std::max(max_abs(Mat2(h.matrix.imag().cast<Complex>())),
                               (re.transpose() * re - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
  o.require(orth < kOrthogonalTol, "orthogonality " + fmt("%.3e", orth));
  double off = 0.0, basis = 0.0;
  const Mat2 ref = diagonalize_in_plane_waves(wz_connection(EtaParameter(1.0), 1, Geometry())).basis_change;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const PlaneWaveFrame f =
          diagonalize_in_plane_waves(wz_connection(EtaParameter(1.0), 1, Geometry(0.5 + 0.5 * i, -1.0 + 0.5 * j)));
      off = std::max(off, f.off_diagonal);
      basis = std::max(basis, max_abs(f.basis_change - ref));
    }
  o.require(off < kOffDiagonalTol, "off-diagonal " + fmt("%.3e", off));
  o.require(basis == 0.0, "basis varies with (l, c)");
  if (o.pass)
    o.detail = "|H + I| = " + fmt("%.2e", dev) + ", orthogonality " + fmt("%.2e", orth) + ", off-diagonal " +
               fmt("%.2e", off);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto rect = ParameterPath::rectangle(1.0, 2.0, 0.0, 1.0);
  const EtaParameter eta(Complex(0, 1));
  std::vector<double> errors;
  double fid = 1.0;
  for (double T : {25.0, 50.0, 100.0, 200.0}) {
    const PhaseReport r = propagate(Schedule(rect, T, static_cast<std::size_t>(20 * T)), 0, eta, 16);
    errors.push_back(std::abs(wrap_angle(r.geometric_phase - kPi / 4)));
    fid = std::min(fid, r.fidelity);
  }
  for (std::size_t i = 1; i < errors.size(); ++i)
    o.require(errors[i] / errors[i - 1] <= kRatioLimit, "T-doubling ratio " + fmt("%.3f", errors[i] / errors[i - 1]));
  o.require(errors.back() < kFinalAdiabaticTol, "final error " + fmt("%.3e", errors.back()));
  o.require(fid > kFidelityMin, "fidelity " + fmt("%.5f", fid));
  if (o.pass)
    o.detail = "errors " + fmt("%.3e", errors[0]) + " -> " + fmt("%.3e", errors.back()) + ", min fidelity " +
               fmt("%.6f", fid);
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto defect = [](std::size_t n) {
    GridFunction f = GridFunction::uniform(-12.0, 12.0, n);
    f.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = f.nodes[i];
      f.values[i] = std::exp(-0.5 * (x - 0.4) * (x - 0.4)) * std::polar(1.0, 1.3 * x);
    }
    return commutator_defect(f);
  };
  std::vector<double> d;
  for (std::size_t n : {241u, 481u, 961u, 1921u}) d.push_back(defect(n));
  std::string orders;
  for (std::size_t i = 1; i < d.size(); ++i) {
    const double p = std::log2(d[i - 1] / d[i]);
    orders += (orders.empty() ? "" : ", ") + fmt("%.3f", p);
    o.require(p > kOrderLow && p < kOrderHigh, "order " + fmt("%.3f", p));
  }
  if (o.pass) o.detail = "observed orders " + orders;
  return o;
}

struct Criterion {
  int id;
  std::function<Outcome()> run;
  double time_limit_s;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, criterion1, 1.0},   {2, criterion2, 1.0},  {3, criterion3, 10.0},
      {4, criterion4, 60.0},  {5, criterion5, 120.0}, {6, criterion6, 60.0},
      {7, criterion7, 60.0},  {8, criterion8, 300.0}, {9, criterion9, 60.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.time_limit_s) o.require(false, "runtime " + fmt("%.1f", dt) + " s over limit");
    std::printf("criterion %d: %s (%s) [%.2f s]\n", c.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), dt);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
