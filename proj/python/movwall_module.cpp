// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "movwall/adiabatic.hpp"
#include "movwall/bc_core.hpp"
#include "movwall/berry.hpp"
#include "movwall/spectral.hpp"
#include "movwall/wilczek_zee.hpp"

namespace py = pybind11;
using namespace movwall;

namespace {

// Accepts a number, a complex, a string such as "0.3-0.2i", or None for inf.
EtaParameter to_eta(const py::object& obj) {
  if (obj.is_none()) return EtaParameter::infinity();
  if (py::isinstance<py::str>(obj)) return EtaParameter::parse(obj.cast<std::string>());
  return EtaParameter(obj.cast<Complex>());
}

py::object from_eta(const std::optional<EtaParameter>& eta) {
  if (!eta) return py::none();
  if (eta->is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::cast(eta->value());
}

ParameterPath rectangle(double l1, double l2, double c1, double c2, int orientation) {
  return ParameterPath::rectangle(l1, l2, c1, c2, orientation);
}

}  // namespace

PYBIND11_MODULE(_movwall, m) {
  m.doc() = "Spectra, Berry phases and adiabatic transport for a box with moving walls";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<SingularParameter>(m, "SingularParameter", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def(
      "eta_to_unitary", [](const py::object& eta) { return eta_to_unitary(to_eta(eta)).matrix(); },
      py::arg("eta"), "2x2 boundary unitary of the eta-family; None means eta = inf.");

  m.def(
      "classify",
      [](const Mat2& u) {
        const Classification c = classify_unitary(BoundaryUnitary(u));
        py::dict out;
        out["kind"] = std::string(to_string(c.kind));
        out["eta"] = from_eta(c.eta);
        out["dilation_invariant"] = c.dilation_invariant();
        return out;
      },
      py::arg("unitary"));

  m.def(
      "wavenumber", [](int n, const py::object& eta) { return wavenumber(n, to_eta(eta)); }, py::arg("n"),
      py::arg("eta"));

  m.def(
      "eigenvalue",
      [](int n, const py::object& eta, double l, double c, double mass) {
        return eigenvalue(make_mode(n, to_eta(eta)), Geometry(l, c), MassConvention(mass));
      },
      py::arg("n"), py::arg("eta"), py::arg("l") = 1.0, py::arg("c") = 0.0, py::arg("mass") = 1.0);

  m.def(
      "generic_spectrum",
      [](const Mat2& u, int count, double l, double c, double mass) {
        std::vector<std::pair<double, int>> out;
        for (const auto& lv : generic_spectrum(BoundaryUnitary(u), count, MassConvention(mass), Geometry(l, c)))
          out.emplace_back(lv.lambda, lv.multiplicity);
        return out;
      },
      py::arg("unitary"), py::arg("count"), py::arg("l") = 1.0, py::arg("c") = 0.0, py::arg("mass") = 1.0,
      "Lowest levels as (lambda, multiplicity) pairs.");

  m.def(
      "connection",
      [](const py::object& eta, int n, double l, double c, const std::string& method) {
        const Mode mode = make_mode(n, to_eta(eta));
        const Geometry g(l, c);
        ConnectionSample s;
        if (method == "analytic") {
          s = connection_analytic(mode, g);
        } else if (method == "interior") {
          s = connection_interior(mode, g);
        } else if (method == "mollified") {
          s = mollified_extrapolation(mode, g, Mollifier::smooth_step(), default_eps_list(g)).extrapolated;
        } else {
          throw InvalidArgument("method must be analytic, interior or mollified");
        }
        return std::make_pair(s.a_l, s.a_c);
      },
      py::arg("eta"), py::arg("n"), py::arg("l") = 1.0, py::arg("c") = 0.0, py::arg("method") = "analytic",
      "(Im<psi|d_l psi>, Im<psi|d_c psi>).");

  m.def(
      "berry_phase",
      [](const py::object& eta, int n, double l1, double l2, double c1, double c2, int orientation) {
        return loop_phase_analytic(make_mode(n, to_eta(eta)), rectangle(l1, l2, c1, c2, orientation));
      },
      py::arg("eta"), py::arg("n") = 0, py::arg("l1") = 1.0, py::arg("l2") = 2.0, py::arg("c1") = 0.0,
      py::arg("c2") = 1.0, py::arg("orientation") = 1);

  m.def(
      "berry_phase_overlap",
      [](const py::object& eta, int n, std::size_t mesh, double l1, double l2, double c1, double c2,
         int orientation) {
        const OverlapPhase p =
            loop_phase_overlap(make_mode(n, to_eta(eta)), rectangle(l1, l2, c1, c2, orientation), mesh);
        return std::make_pair(p.phase, p.error_estimate);
      },
      py::arg("eta"), py::arg("n") = 0, py::arg("mesh") = 1024, py::arg("l1") = 1.0, py::arg("l2") = 2.0,
      py::arg("c1") = 0.0, py::arg("c2") = 1.0, py::arg("orientation") = 1,
      "(phase, |phase(mesh) - phase(mesh / 2)|).");

  m.def(
      "wz_holonomy",
      [](const py::object& eta, int n, std::size_t mesh, double l1, double l2, double c1, double c2,
         int orientation) {
        const Holonomy h = wz_holonomy(to_eta(eta), n, rectangle(l1, l2, c1, c2, orientation), mesh);
        return std::make_pair(Mat2(h.matrix), h.eigenphases);
      },
      py::arg("eta") = 1.0, py::arg("n") = 1, py::arg("mesh") = 1024, py::arg("l1") = 1.0,
      py::arg("l2") = 2.0, py::arg("c1") = 0.0, py::arg("c2") = 1.0, py::arg("orientation") = 1,
      "(holonomy matrix, eigenphases).");

  m.def(
      "propagate",
      [](const py::object& eta, double T, int n, int window, std::size_t steps, double l1, double l2, double c1,
         double c2, int orientation, double mass) {
        const PhaseReport r = propagate(Schedule(rectangle(l1, l2, c1, c2, orientation), T, steps), n,
                                        to_eta(eta), window, MassConvention(mass));
        py::dict out;
        out["total"] = r.total_phase;
        out["dynamical"] = r.dynamical_phase;
        out["geometric"] = r.geometric_phase;
        out["fidelity"] = r.fidelity;
        out["norm_drift"] = r.norm_drift;
        out["warning"] = r.warning;
        return out;
      },
      py::arg("eta"), py::arg("T"), py::arg("n") = 0, py::arg("window") = 16, py::arg("steps") = 2000,
      py::arg("l1") = 1.0, py::arg("l2") = 2.0, py::arg("c1") = 0.0, py::arg("c2") = 1.0,
      py::arg("orientation") = 1, py::arg("mass") = 1.0);
}
