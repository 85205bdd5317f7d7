// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "movwall/adiabatic.hpp"
#include "movwall/berry.hpp"
#include "oracles/oracles.hpp"

using namespace movwall;

namespace {

const EtaParameter kEtaI(Complex(0, 1));
const ParameterPath kRect = ParameterPath::rectangle(1.0, 2.0, 0.0, 1.0);

PhaseReport run(const EtaParameter& eta, double T, int window, std::size_t per_unit_time,
                const PropagationOptions& opt = {}) {
  const auto steps = std::max<std::size_t>(100, static_cast<std::size_t>(per_unit_time * T));
  return propagate(Schedule(kRect, T, steps), 0, eta, window, MassConvention(), opt);
}

}  // namespace

TEST_SUITE("adiabatic") {
  TEST_CASE("mode window") {
    const ModeWindow w(kEtaI, 3);
    CHECK(w.size() == 7);
    CHECK(w.modes()[w.index_of(0)].n == 0);
    CHECK(w.modes()[w.index_of(-3)].n == -3);
    CHECK_THROWS_AS((void)w.index_of(4), InvalidArgument);
    CHECK_THROWS_AS(ModeWindow(EtaParameter(1.0), 3), SingularParameter);
    CHECK_THROWS_AS(ModeWindow(kEtaI, -1), InvalidArgument);
  }

  TEST_CASE("matrix elements against closed-form moments") {
    for (const Complex eta : {Complex(0, 1), Complex(0.5, 0), Complex(-0.3, 0.4)}) {
      const FixedFrameOperators ops(ModeWindow(EtaParameter(eta), 4));
      const auto& modes = ops.window.modes();
      for (std::size_t i = 0; i < modes.size(); ++i)
        for (std::size_t j = 0; j < modes.size(); ++j) {
          const auto [p, x] = oracle::momentum_and_virial(modes[i].k, modes[j].k, modes[i].alpha);
          const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
          CHECK(std::abs(ops.p_raw(ii, jj) - p) < 1e-10);
          CHECK(std::abs(ops.virial_raw(ii, jj) - x) < 1e-10);
        }
    }
  }

  TEST_CASE("raw momentum is Hermitian exactly on the unit circle") {
    CHECK(hermiticity_defect(FixedFrameOperators(ModeWindow(kEtaI, 8)).p_raw) < 1e-10);
    CHECK(hermiticity_defect(FixedFrameOperators(ModeWindow(EtaParameter(0.0), 2)).p_raw) > 1.0);
    const FixedFrameOperators ops(ModeWindow(EtaParameter(Complex(-0.3, 0.4)), 3));
    CHECK(hermiticity_defect(ops.p) < 1e-14);
    CHECK(hermiticity_defect(ops.virial) < 1e-14);
  }

  TEST_CASE("static Hamiltonian is the diagonal spectrum") {
    const ModeWindow w(kEtaI, 4);
    const MatrixXc h1 = effective_hamiltonian(w, Geometry(1.0, 0.0), 0.0, 0.0);
    const MatrixXc h2 = effective_hamiltonian(w, Geometry(2.0, 0.7), 0.0, 0.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      CHECK(h1(ii, ii).real() == doctest::Approx(eigenvalue(w.modes()[i], Geometry())).epsilon(1e-14));
      CHECK(h2(ii, ii).real() == doctest::Approx(h1(ii, ii).real() / 4).epsilon(1e-14));
    }
    MatrixXc off = h1;
    off.diagonal().setZero();
    CHECK(off.cwiseAbs().maxCoeff() == 0.0);
    const MatrixXc moving = effective_hamiltonian(w, Geometry(1.3, 0.0), 0.2, -0.4);
    CHECK(hermiticity_defect(moving) < 1e-13);
  }

  TEST_CASE("schedule validation") {
    CHECK_THROWS_AS(Schedule(kRect, 0.0, 1000), InvalidArgument);
    CHECK_THROWS_AS(Schedule(kRect, 10.0, 50), InvalidArgument);
    CHECK_THROWS_AS(Schedule(ParameterPath::polyline({{1, 0}, {2, 0}}, false), 10.0, 1000), InvalidArgument);
  }

  TEST_CASE("sitting still accumulates only the dynamical phase") {
    const PhaseReport r = propagate(Schedule(ParameterPath::constant({1.0, 0.0}), 3.0, 300), 0, kEtaI, 4);
    CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.geometric_phase) < 1e-10);
    CHECK(r.dynamical_phase == doctest::Approx(-3.0 * kPi * kPi / 8).epsilon(1e-12));
  }

  TEST_CASE("slow rectangle reproduces the Berry phase with 1/T error") {
    const double exact = loop_phase_analytic(make_mode(0, kEtaI), kRect);
    const PhaseReport a = run(kEtaI, 50.0, 8, 20);
    const PhaseReport b = run(kEtaI, 100.0, 8, 20);
    const double ea = std::abs(wrap_angle(a.geometric_phase - exact));
    const double eb = std::abs(wrap_angle(b.geometric_phase - exact));
    CHECK(eb < 1e-2);
    CHECK(eb / ea == doctest::Approx(0.5).epsilon(0.1));
    CHECK(b.fidelity > 0.999);
    CHECK(b.norm_drift < 1e-10);
    CHECK_FALSE(b.warning);
    CHECK(b.max_off_window_coupling > 0.0);
  }

  TEST_CASE("result does not depend on the initial gauge") {
    PropagationOptions opt;
    opt.initial_phase = 1.234;
    const PhaseReport a = run(kEtaI, 25.0, 6, 20);
    const PhaseReport b = run(kEtaI, 25.0, 6, 20, opt);
    CHECK(std::abs(wrap_angle(a.geometric_phase - b.geometric_phase)) < 1e-12);
    CHECK(a.fidelity == doctest::Approx(b.fidelity).epsilon(1e-12));
  }

  TEST_CASE("window truncation is converged") {
    const PhaseReport a = run(kEtaI, 200.0, 8, 10);
    const PhaseReport b = run(kEtaI, 200.0, 16, 10);
    CHECK(std::abs(wrap_angle(a.geometric_phase - b.geometric_phase)) < 1e-4);
  }

  TEST_CASE("real eta has vanishing adiabatic phase") {
    const PhaseReport r = run(EtaParameter(0.0), 6400.0, 8, 10);
    CHECK(std::abs(r.geometric_phase) < 1e-3);
  }

  TEST_CASE("fast traversal raises the fidelity warning") {
    const PhaseReport r = propagate(Schedule(kRect, 0.2, 400), 0, kEtaI, 8);
    CHECK(r.fidelity < 0.9);
    CHECK(r.warning);
  }
}
