"""Verification suites pairing each oracle with its closed-form counterpart.

Each suite returns ResidualReport rows plus free-form notes. Sample
counts and seeds are fixed so repeated runs produce identical reports.
Checks whose purpose is to reject corrupted input ("negative controls")
report an indicator residual: 0 when the corruption was detected, 1 when
it slipped through.
"""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from . import diffraction, many_body, one_body, scattering, verify
from .core import InteractionParams, canonical_interaction, validate_params
from .errors import InputError
from .verify import ResidualReport

SUITE_NAMES = ("bound", "scatter", "nbody-boundary", "nbody-interior", "diffraction")

_SEED = 20240901

# Generic interaction with a two-state spectrum, used wherever a suite
# needs both branches populated.
_TWO_STATE = dict(alpha=-2.0, beta=3.0, gamma=-2.0, delta=1.0, theta=0.0, mass=0.5)


def _two_state_params(theta: float = 0.0) -> InteractionParams:
    kwargs = dict(_TWO_STATE)
    kwargs["theta"] = theta
    return validate_params(**kwargs)


def run_bound_suite(draws: int = 1000) -> tuple[list[ResidualReport], list[str]]:
    """Closed-form spectra against bracketing root finding on random draws."""
    rng = np.random.default_rng(_SEED)
    worst = 0.0
    for _ in range(draws):
        params = verify.random_params(rng)
        oracle = verify.oracle_bound_kappas(params)
        closed = sorted(st.kappa for st in one_body.bound_spectrum(params))
        if len(oracle) != len(closed):
            worst = max(worst, 1.0)
            continue
        for a, b in zip(oracle, closed):
            worst = max(worst, abs(a - b) / max(1.0, abs(b)))
    return [ResidualReport.build("bound-spectrum vs bracketing oracle", worst, draws, 1e-10)], []


def run_scatter_suite(draws: int = 1000) -> tuple[list[ResidualReport], list[str]]:
    """Closed-form amplitudes against the matching solve, plus unitarity."""
    rng = np.random.default_rng(_SEED + 1)
    worst_match = 0.0
    worst_unitarity = 0.0
    for _ in range(draws):
        params = verify.random_params(rng)
        k = float(rng.uniform(1e-3, 10.0))
        amps = scattering.amplitudes(params, k)
        t_minus, r_minus = verify.scattering_matching_oracle(params, k, "minus")
        t_plus, r_plus = verify.scattering_matching_oracle(params, k, "plus")
        worst_match = max(
            worst_match,
            abs(amps.t_minus - t_minus),
            abs(amps.r_minus - r_minus),
            abs(amps.t_plus - t_plus),
            abs(amps.r_plus - r_plus),
        )
        worst_unitarity = max(worst_unitarity, scattering.unitarity_defect(amps))
    reports = [
        ResidualReport.build("amplitudes vs matching oracle", worst_match, draws, 1e-12),
        ResidualReport.build("flux conservation", worst_unitarity, draws, 1e-12),
    ]
    # Negative control: breaking the determinant constraint must break
    # unitarity (beta only enters the constraint when delta != 0).
    broken = replace(_two_state_params(), beta=3.1)
    defect = scattering.unitarity_defect(scattering.amplitudes(broken, 1.0))
    indicator = 0.0 if defect > 1e-3 else 1.0
    reports.append(
        ResidualReport.build("negative control: constraint break detected", indicator, 1, 0.5)
    )
    return reports, []


def run_nbody_boundary_suite(samples: int = 50) -> tuple[list[ResidualReport], list[str]]:
    """Boundary-condition residuals for three-body states on all three lines."""
    reports = []
    cases = [
        ("delta", canonical_interaction("delta", -2.0, 0.5)),
        ("two-state", _two_state_params(0.7)),
    ]
    for label, params in cases:
        for state in many_body.nbody_bound_states(params, 3):
            for line in ("x12", "x23", "x31"):
                rep = verify.boundary_residual_3body(params, state, line, samples)
                reports.append(
                    replace(rep, check_name=f"{label} {state.branch} {rep.check_name}")
                )
    params = cases[1][1]
    state = many_body.nbody_bound_states(params, 3)[0]
    corrupted = replace(state, c_odd=state.c_odd * 1.1)
    rep = verify.boundary_residual_3body(params, corrupted, "x12", samples)
    indicator = 0.0 if rep.max_residual > 1e-2 else 1.0
    reports.append(
        ResidualReport.build("negative control: corrupted coefficients detected", indicator, 1, 0.5)
    )
    return reports, []


def run_nbody_interior_suite(points: int = 100) -> tuple[list[ResidualReport], list[str]]:
    """Finite-difference eigenvalue residuals for N = 2..5."""
    reports = []
    cases = [
        ("delta", canonical_interaction("delta", -2.0, 0.5)),
        ("two-state", _two_state_params()),
    ]
    for label, params in cases:
        for n in range(2, 6):
            for state in many_body.nbody_bound_states(params, n):
                rep = verify.interior_residual(params, state, points)
                reports.append(
                    replace(rep, check_name=f"{label} n={n} {state.branch} {rep.check_name}")
                )
    return reports, []


def run_diffraction_suite(samples: int = 2000) -> tuple[list[ResidualReport], list[str]]:
    """No-diffraction residuals, violation detection, and the momentum identity."""
    reports = []
    for label, params in (
        ("delta", canonical_interaction("delta", -2.0, 0.5)),
        ("anti-delta", canonical_interaction("anti_delta", -2.0, 0.5)),
    ):
        max_res, _ = diffraction.no_diffraction_scan(params, samples)
        reports.append(
            ResidualReport.build(
                f"{label} diffraction-free sweep", max_res, samples, diffraction.NO_DIFFRACTION_TOL
            )
        )
    rng = np.random.default_rng(_SEED + 2)
    violators = [canonical_interaction("delta_prime", -4.0, 1.0)]
    while len(violators) < 20:
        params = verify.random_params(rng)
        off = max(
            abs(params.alpha - params.gamma),
            abs(params.delta),
            abs(math.sin(params.theta)),
        )
        if off >= 0.1:
            violators.append(params)
    missed = 0
    for params in violators:
        found = False
        for k, phi in diffraction.scan_points(64):
            rep = diffraction.outgoing_amplitudes(params, diffraction.ray_kinematics(k, phi))
            if rep.residual_norm > 1e-6:
                found = True
                break
        if not found:
            missed += 1
    reports.append(
        ResidualReport.build(
            "violating parameter sets show diffraction", float(missed), len(violators), 0.5
        )
    )
    rng_phi = np.random.default_rng(_SEED + 3)
    worst_identity = 0.0
    n_phi = 10_000
    for phi in rng_phi.uniform(1e-6, diffraction.PHI_MAX - 1e-6, size=n_phi):
        kin = diffraction.ray_kinematics(1.0, float(phi))
        worst_identity = max(worst_identity, abs(kin.k1 + kin.k3 - kin.k2))
    reports.append(
        ResidualReport.build("normal-momentum additivity", worst_identity, n_phi, 1e-15)
    )
    notes = [
        "momentum identity holds as k1 + k3 = k2 for the angle convention in use; "
        "the alternative ordering k1 + k2 = k3 does not hold."
    ]
    return reports, notes


_SUITES = {
    "bound": run_bound_suite,
    "scatter": run_scatter_suite,
    "nbody-boundary": run_nbody_boundary_suite,
    "nbody-interior": run_nbody_interior_suite,
    "diffraction": run_diffraction_suite,
}


def run_suite(name: str) -> tuple[list[ResidualReport], list[str]]:
    """Run one named suite, or all of them in declaration order."""
    if name == "all":
        reports: list[ResidualReport] = []
        notes: list[str] = []
        for suite_name in SUITE_NAMES:
            r, n = _SUITES[suite_name]()
            reports.extend(r)
            notes.extend(n)
        return reports, notes
    if name not in _SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    return _SUITES[name]()
