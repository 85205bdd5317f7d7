// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "doctest.h"
#include "movwall/spectral.hpp"

using namespace movwall;

namespace {

// Closed-form eta-family energies sorted ascending, enough to cover `count`.
std::vector<double> closed_form_levels(const EtaParameter& eta, int count, const Geometry& g) {
  std::vector<double> out;
  for (int n = -count - 2; n <= count + 2; ++n) out.push_back(eigenvalue(make_mode(n, eta), g));
  std::sort(out.begin(), out.end());
  out.resize(static_cast<std::size_t>(count));
  return out;
}

double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_SUITE("generic_spectrum") {
  TEST_CASE("Dirichlet levels") {
    const auto levels = generic_spectrum(BoundaryUnitary::dirichlet(), 8);
    REQUIRE(levels.size() == 8);
    for (int j = 1; j <= 8; ++j)
      CHECK(levels[j - 1].lambda == doctest::Approx(j * j * kPi * kPi / 2).epsilon(1e-9));
  }

  TEST_CASE("Neumann levels start at zero") {
    const auto levels = generic_spectrum(BoundaryUnitary::neumann(), 4, MassConvention(1.0), Geometry(2.0, 0.3));
    CHECK(std::abs(levels[0].lambda) < 1e-12);
    for (int j = 1; j < 4; ++j)
      CHECK(levels[j].lambda == doctest::Approx(j * j * kPi * kPi / 8).epsilon(1e-9));
  }

  TEST_CASE("eta family against the closed form") {
    for (const Complex eta : {Complex(0, 1), Complex(0, 0), Complex(0.5, 0), Complex(0, 2), Complex(-0.3, 0.4)}) {
      const EtaParameter e(eta);
      const Geometry g(1.4, -0.2);
      const auto levels = generic_spectrum(eta_to_unitary(e), 9, MassConvention(0.7), g);
      std::vector<double> expected;
      for (int n = -6; n <= 6; ++n) expected.push_back(eigenvalue(make_mode(n, e), g, MassConvention(0.7)));
      std::sort(expected.begin(), expected.end());
      for (std::size_t i = 0; i < levels.size(); ++i) {
        CHECK(levels[i].lambda == doctest::Approx(expected[i]).epsilon(1e-9));
        CHECK(levels[i].multiplicity == 1);
      }
    }
    CHECK(closed_form_levels(EtaParameter(Complex(0, 1)), 2, Geometry())[0] ==
          doctest::Approx(kPi * kPi / 8));
  }

  TEST_CASE("periodic double levels") {
    const auto levels = generic_spectrum(BoundaryUnitary::periodic(), 5);
    REQUIRE(levels.size() == 5);
    CHECK(std::abs(levels[0].lambda) < 1e-12);
    CHECK(levels[0].multiplicity == 1);
    for (int i : {1, 2}) {
      CHECK(levels[i].lambda == doctest::Approx(2 * kPi * kPi).epsilon(1e-9));
      CHECK(levels[i].multiplicity == 2);
    }
    CHECK(levels[3].lambda == doctest::Approx(8 * kPi * kPi).epsilon(1e-9));
    const auto anti = generic_spectrum(BoundaryUnitary::antiperiodic(), 2);
    CHECK(anti[0].lambda == doctest::Approx(kPi * kPi / 2).epsilon(1e-9));
    CHECK(anti[1].multiplicity == 2);
  }

  TEST_CASE("bound state below zero") {
    // U = -i I: psi'(a) = -psi(a), psi'(b) = psi(b). The even bound state has
    // kappa tanh(kappa / 2) = 1.
    Mat2 m = -kI * Mat2::Identity();
    const auto levels = generic_spectrum(BoundaryUnitary(m), 2);
    const double kappa = bisect([](double k) { return k * std::tanh(k / 2) - 1.0; }, 0.1, 5.0);
    CHECK(levels[0].lambda == doctest::Approx(-kappa * kappa / 2).epsilon(1e-9));
    CHECK(levels[0].scaled_wavenumber < 0.0);
  }

  TEST_CASE("returned eigenfunctions are normalised sines for Dirichlet") {
    const auto levels = generic_spectrum(BoundaryUnitary::dirichlet(), 1, MassConvention(), Geometry(1.0, 0.5));
    const GridFunction& f = levels[0].eigenfunction;
    CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < f.nodes.size(); i += 7)
      CHECK(std::abs(std::abs(f.values[i]) - std::sqrt(2.0) * std::sin(kPi * f.nodes[i])) < 1e-9);
  }

  TEST_CASE("secular function changes sign at simple levels") {
    const BoundaryUnitary u = eta_to_unitary(EtaParameter(Complex(0, 1)));
    const double s0 = kPi / 2;
    CHECK(secular_function(u, Geometry(), s0 - 1e-3) * secular_function(u, Geometry(), s0 + 1e-3) < 0.0);
  }

  TEST_CASE("bad requests") { CHECK_THROWS_AS(generic_spectrum(BoundaryUnitary::dirichlet(), 0), InvalidArgument); }
}
