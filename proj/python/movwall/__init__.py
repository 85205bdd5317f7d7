# Copyright 2026 The movwall Authors
# SPDX-License-Identifier: Apache-2.0
"""Quantum particle in a box with moving walls: spectra, Berry phases, holonomies."""

from ._movwall import (
    ConvergenceError,
    InvalidArgument,
    SingularParameter,
    berry_phase,
    berry_phase_overlap,
    classify,
    connection,
    eigenvalue,
    eta_to_unitary,
    generic_spectrum,
    propagate,
    wavenumber,
    wz_holonomy,
)

__all__ = [
    "ConvergenceError",
    "InvalidArgument",
    "SingularParameter",
    "berry_phase",
    "berry_phase_overlap",
    "classify",
    "connection",
    "eigenvalue",
    "eta_to_unitary",
    "generic_spectrum",
    "propagate",
    "wavenumber",
    "wz_holonomy",
]
