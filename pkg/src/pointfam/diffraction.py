"""Three-body ray kinematics and the no-diffraction test.

A plane wave incident in one wedge of the three-body relative plane
reaches the outgoing wedge along two distinct ray geometries of equal
path length: one that hits the x12 line first (two contributing paths)
and one that hits the x31 line first (a single path). When the two
amplitude products coincide for every wavenumber and incidence angle,
the exact scattering construction goes through; this happens exactly for
alpha = gamma, delta = 0, and a real phase, which pins the interaction
to the contact potential or its sign-reversed twin.

The two published statements of the two-path geometry disagree in one
incidence suffix of the middle reflection; both variants are available
through the middle_reflection flag. For every diffraction-free parameter
set the reflection amplitudes of the two directions coincide, so the
choice never affects a verdict, only the residual magnitude of generic
parameter sets.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from scipy.stats import qmc

from .core import InteractionParams
from .errors import GrazingAngle, InputError
from .scattering import amplitudes

PHI_MAX = math.pi / 3.0

# Scan verdict threshold: diffraction-free families sit at round-off,
# violations show up many orders of magnitude above this.
NO_DIFFRACTION_TOL = 1e-10

# Scan margins keep rays away from grazing incidence where k_i -> 0.
_SCAN_K_RANGE = (1e-3, 10.0)
_SCAN_PHI_MARGIN = 0.01


@dataclass(frozen=True)
class RayKinematics:
    """The three incidence angles and normal wavenumbers derived from (k, phi)."""

    k: float
    phi: float
    phi1: float
    phi2: float
    phi3: float
    k1: float
    k2: float
    k3: float


@dataclass(frozen=True)
class DiffractionReport:
    """Outgoing amplitudes of the two equal-length ray geometries."""

    amp_two_path: complex  # geometry hitting the x12 line first
    amp_one_path: complex  # geometry hitting the x31 line first
    residual: complex
    residual_norm: float


def ray_kinematics(k: float, phi: float) -> RayKinematics:
    """Angles phi, phi + pi/3, -phi + pi/3 and the normal components k_i = k sin(phi_i).

    phi must lie strictly inside (0, pi/3) so that every k_i is positive.
    The construction forces k1 + k3 = k2 identically; this is asserted.
    """
    if not k > 0.0:
        raise InputError(f"total wavenumber must be positive, got {k!r}")
    if not 0.0 < phi < PHI_MAX:
        raise GrazingAngle(f"phi = {phi!r} is outside the open interval (0, pi/3)")
    phi1 = phi
    phi2 = phi + PHI_MAX
    phi3 = -phi + PHI_MAX
    k1 = k * math.sin(phi1)
    k2 = k * math.sin(phi2)
    k3 = k * math.sin(phi3)
    assert abs(k1 + k3 - k2) <= 1e-12 * max(1.0, k)
    return RayKinematics(k, phi, phi1, phi2, phi3, k1, k2, k3)


def outgoing_amplitudes(
    params: InteractionParams,
    kin: RayKinematics,
    middle_reflection: str = "minus",
) -> DiffractionReport:
    """Amplitude products of the two ray geometries and their difference.

    The incident wave has unit amplitude. Writing t_i/r_i for the
    amplitudes at normal wavenumber k_i, the two-path geometry sums
    r1- r2- t3- with t1- r2(mr) r3+, where mr is the middle_reflection
    suffix; the one-path geometry contributes r3- t2+ r1+.
    """
    if middle_reflection not in ("minus", "plus"):
        raise InputError(f"unknown middle_reflection {middle_reflection!r}")
    a1 = amplitudes(params, kin.k1)
    a2 = amplitudes(params, kin.k2)
    a3 = amplitudes(params, kin.k3)
    r2_mid = a2.r_minus if middle_reflection == "minus" else a2.r_plus
    two_path = a1.r_minus * a2.r_minus * a3.t_minus + a1.t_minus * r2_mid * a3.r_plus
    one_path = a3.r_minus * a2.t_plus * a1.r_plus
    residual = two_path - one_path
    return DiffractionReport(
        amp_two_path=two_path,
        amp_one_path=one_path,
        residual=residual,
        residual_norm=abs(residual),
    )


def scan_points(samples: int) -> list[tuple[float, float]]:
    """Deterministic low-discrepancy (k, phi) sample set for residual scans."""
    if samples < 1:
        raise InputError("samples must be at least 1")
    sampler = qmc.Halton(d=2, scramble=False)
    sampler.fast_forward(1)  # skip the degenerate (0, 0) leading point
    unit = sampler.random(samples)
    k_lo, k_hi = _SCAN_K_RANGE
    phi_lo = _SCAN_PHI_MARGIN
    phi_hi = PHI_MAX - _SCAN_PHI_MARGIN
    return [
        (float(k_lo + (k_hi - k_lo) * u), float(phi_lo + (phi_hi - phi_lo) * v))
        for u, v in unit
    ]


def default_workers() -> int:
    """Worker cap for scans: POINTFAM_THREADS if set, else machine parallelism."""
    env = os.environ.get("POINTFAM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise InputError(f"POINTFAM_THREADS must be an integer, got {env!r}") from exc
    return os.cpu_count() or 1


def no_diffraction_scan(
    params: InteractionParams,
    samples: int,
    middle_reflection: str = "minus",
    workers: int | None = None,
) -> tuple[float, bool]:
    """Max residual over a quasi-random (k, phi) sweep and the verdict.

    The verdict is True when the maximum residual stays at or below
    NO_DIFFRACTION_TOL. Points are independent; the max reduction is
    deterministic regardless of the worker count.
    """
    points = scan_points(samples)
    if workers is None:
        workers = default_workers()

    def chunk_max(chunk: list[tuple[float, float]]) -> float:
        worst = 0.0
        for k, phi in chunk:
            report = outgoing_amplitudes(
                params, ray_kinematics(k, phi), middle_reflection
            )
            if report.residual_norm > worst:
                worst = report.residual_norm
        return worst

    if workers <= 1 or len(points) < 256:
        max_residual = chunk_max(points)
    else:
        size = max(1, (len(points) + workers - 1) // workers)
        chunks = [points[i : i + size] for i in range(0, len(points), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            max_residual = max(pool.map(chunk_max, chunks))
    return max_residual, max_residual <= NO_DIFFRACTION_TOL
