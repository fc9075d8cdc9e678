"""Transmission and reflection amplitudes of a point interaction.

The plus/minus suffixes label the direction of incidence: minus for a wave
coming in from the left, plus for a wave coming in from the right. Only
the transmission amplitudes carry the phase exp(-+i*theta); reflection is
theta-free. The determinant constraint makes |t|^2 + |r|^2 = 1 exact for
either direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InteractionParams
from .errors import SingularDenominator

DENOMINATOR_MIN = 1e-300


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """Amplitudes for both incidence directions at one wavenumber k > 0."""

    k: float
    t_plus: complex
    t_minus: complex
    r_plus: complex
    r_minus: complex
    denominator: complex


def amplitudes(params: InteractionParams, k: float) -> ScatteringAmplitudes:
    """Closed-form amplitudes at wavenumber k > 0.

    Raises SingularDenominator if the common denominator vanishes, which
    cannot happen for a valid parameter set and real positive k.
    """
    if not k > 0.0:
        raise ValueError(f"wavenumber must be positive, got {k!r}")
    a, b, g, d, m = params.alpha, params.beta, params.gamma, params.delta, params.mass
    den = d * k * k + 2j * k * m * (a + g) - 4.0 * b * m * m
    if abs(den) < DENOMINATOR_MIN:
        raise SingularDenominator(f"denominator vanished at k = {k!r}")
    ph = params.phase
    t_common = 4j * k * m / den
    cross = 2j * k * m * (a - g)
    r_num = d * k * k + 4.0 * b * m * m
    return ScatteringAmplitudes(
        k=k,
        t_plus=t_common / ph,
        t_minus=t_common * ph,
        r_plus=(r_num - cross) / den,
        r_minus=(r_num + cross) / den,
        denominator=den,
    )


def unitarity_defect(amps: ScatteringAmplitudes) -> float:
    """Largest deviation of |t|^2 + |r|^2 from 1 over the two directions."""
    plus = abs(amps.t_plus) ** 2 + abs(amps.r_plus) ** 2 - 1.0
    minus = abs(amps.t_minus) ** 2 + abs(amps.r_minus) ** 2 - 1.0
    return max(abs(plus), abs(minus))
