"""Bound states of a single particle on a point interaction.

Because the pair coordinate of the equal-mass two-body problem obeys the
same equation, everything here doubles as the two-body relative problem.

A bound state decays as exp(-kappa*|x|) on both sides of the origin with
a common decay constant kappa > 0 and energy -kappa^2/(2m). The boundary
condition admits zero, one, or two such kappa, the positive roots of

    delta*kappa^2 + 2*(alpha+gamma)*kappa*m + 4*beta*m^2 = 0.

The wavefunction is generally discontinuous at the origin; its jump ratio
eta = psi(+0)/psi(-0) controls everything downstream (orthogonality of a
two-state spectrum, many-body coefficient propagation, symmetry classes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import InteractionParams
from .errors import InvalidSlice

# Roots at or below this are treated as non-normalizable and dropped.
KAPPA_MIN = 1e-12


@dataclass(frozen=True)
class BoundState:
    """One bound level in the gauge c_minus = 1, c_plus = eta."""

    kappa: float
    energy: float
    eta: complex
    c_plus: complex
    c_minus: complex
    branch: str  # "plus" or "minus" for a two-root family, else "single"


def jump_ratio_forms(params: InteractionParams, kappa: float) -> tuple[complex, complex]:
    """Both closed forms of eta at the given decay constant.

    They agree exactly when kappa solves the decay-rate equation; the pair
    is exposed so the agreement can be checked independently.
    """
    ph = params.phase
    form_a = -ph * (params.alpha + 2.0 * params.beta * params.mass / kappa)
    form_b = ph * (params.gamma + params.delta * kappa / (2.0 * params.mass))
    return form_a, form_b


def _kappa_roots(params: InteractionParams) -> list[tuple[float, str]]:
    """Real roots of the decay-rate quadratic with their branch tags.

    For delta != 0 the two roots are evaluated with the usual cancellation
    guard (the non-cancelling root directly, the other via the product of
    roots). For delta = 0 the equation is linear.
    """
    a, g, d, m = params.alpha, params.gamma, params.delta, params.mass
    b = params.beta
    if d == 0.0:
        # Valid params with delta = 0 force alpha*gamma = 1, so alpha+gamma != 0.
        return [(-2.0 * b * m / (a + g), "single")]
    s = math.hypot(a - g, 2.0)  # sqrt((alpha-gamma)^2 + 4), always >= 2
    trace = a + g
    product = 4.0 * b * m * m / d  # kappa_plus * kappa_minus
    if trace <= 0.0:
        k_plus = m * (-trace + s) / d
        k_minus = product / k_plus if b != 0.0 else m * (-trace - s) / d
    else:
        k_minus = m * (-trace - s) / d
        k_plus = product / k_minus if b != 0.0 else m * (-trace + s) / d
    return [(k_plus, "plus"), (k_minus, "minus")]


def bound_spectrum(params: InteractionParams) -> list[BoundState]:
    """Every bound state of the interaction, lowest energy first.

    Returns an empty list when no root is positive. Roots within KAPPA_MIN
    of zero are discarded as non-normalizable.
    """
    states = []
    for kappa, branch in _kappa_roots(params):
        if kappa <= KAPPA_MIN:
            continue
        eta = jump_ratio_forms(params, kappa)[1]
        states.append(
            BoundState(
                kappa=kappa,
                energy=-kappa * kappa / (2.0 * params.mass),
                eta=eta,
                c_plus=eta,
                c_minus=1.0 + 0.0j,
                branch=branch,
            )
        )
    states.sort(key=lambda st: st.energy)
    # A double root cannot occur over the reals; two surviving states are distinct.
    assert len({st.kappa for st in states}) == len(states)
    return states


def phase_diagram_count(
    alpha: float, gamma: float, delta: float, beta: float | None = None
) -> int:
    """Number of bound states on the (alpha, gamma, delta) slice: 0, 1, or 2.

    For delta != 0, beta is pinned by the determinant constraint and the
    count is independent of mass and beta. For delta = 0 the slice is only
    meaningful when alpha*gamma = 1, and the sign of the single candidate
    root depends on beta, which the caller must supply.
    """
    if delta == 0.0:
        if abs(alpha * gamma - 1.0) > 1e-12:
            raise InvalidSlice(
                "delta = 0 requires alpha*gamma = 1 for a valid interaction"
            )
        if beta is None:
            raise InvalidSlice("delta = 0 needs an explicit beta to fix the root sign")
        root = -2.0 * beta / (alpha + gamma)
        return 1 if root > KAPPA_MIN else 0
    s = math.hypot(alpha - gamma, 2.0)
    trace = alpha + gamma
    count = 0
    for signed in ((-trace + s) / delta, (-trace - s) / delta):
        if signed > KAPPA_MIN:
            count += 1
    return count


def orthogonality_sum(state_a: BoundState, state_b: BoundState) -> complex:
    """conj(a.c_plus)*b.c_plus + conj(a.c_minus)*b.c_minus.

    Vanishes identically for the two branches of one interaction, which is
    what makes the two levels orthogonal.
    """
    return (
        state_a.c_plus.conjugate() * state_b.c_plus
        + state_a.c_minus.conjugate() * state_b.c_minus
    )


def eval_bound_wavefunction(state: BoundState, x: float) -> complex:
    """Wavefunction value at x; at x = 0 the left-limit value c_minus is returned."""
    if x > 0.0:
        return state.c_plus * math.exp(-state.kappa * x)
    return state.c_minus * math.exp(state.kappa * x)
