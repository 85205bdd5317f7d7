# Copyright 2026 The movwall Authors
# SPDX-License-Identifier: Apache-2.0

import math

import numpy as np
import pytest

import movwall


def test_named_unitaries():
    np.testing.assert_array_equal(movwall.eta_to_unitary(1.0), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(movwall.eta_to_unitary(None), [[1, 0], [0, -1]])
    assert movwall.classify(-np.eye(2))["kind"] == "dirichlet"
    c = movwall.classify(movwall.eta_to_unitary("0.3-0.2i"))
    assert c["kind"] == "eta_family"
    assert abs(c["eta"] - complex(0.3, -0.2)) < 1e-12


def test_ground_state():
    assert movwall.wavenumber(0, 1j) == pytest.approx(math.pi / 2, rel=1e-15)
    assert movwall.eigenvalue(0, "i") == pytest.approx(math.pi**2 / 8, rel=1e-15)
    assert movwall.eigenvalue(0, 1j, l=2.0) == pytest.approx(math.pi**2 / 32, rel=1e-15)


def test_generic_spectrum_matches_closed_form():
    levels = movwall.generic_spectrum(movwall.eta_to_unitary(1j), 3)
    expected = sorted(movwall.eigenvalue(n, 1j) for n in range(-3, 4))[:3]
    for (lam, mult), ref in zip(levels, expected):
        assert mult == 1
        assert lam == pytest.approx(ref, rel=1e-9)


def test_berry_phases():
    assert movwall.berry_phase(1j) == pytest.approx(math.pi / 4, rel=1e-14)
    phase, err = movwall.berry_phase_overlap(1j, mesh=256)
    assert phase == pytest.approx(math.pi / 4, abs=1e-10)
    assert err < 1e-10
    a_l, a_c = movwall.connection(1j, 0, l=2.0, method="interior")
    assert abs(a_l) < 1e-8
    assert a_c == pytest.approx(math.pi / 4, rel=1e-8)
    assert abs(movwall.berry_phase(0.5)) < 1e-14


def test_holonomy():
    matrix, phases = movwall.wz_holonomy(mesh=512)
    np.testing.assert_allclose(matrix, -np.eye(2), atol=1e-8)
    assert abs(abs(phases[0]) - math.pi) < 1e-8


def test_adiabatic_phase():
    r = movwall.propagate(1j, T=50.0, window=6, steps=1000)
    assert abs(r["geometric"] - math.pi / 4) < 0.02
    assert r["fidelity"] > 0.99
    assert not r["warning"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        movwall.wavenumber(0, 1.0)
    with pytest.raises(ValueError):
        movwall.eta_to_unitary("nonsense")
    with pytest.raises(ValueError):
        movwall.classify(np.array([[1.0, 1.0], [0.0, 1.0]]))
