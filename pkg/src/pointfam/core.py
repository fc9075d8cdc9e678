"""Parameters and boundary condition of a penetrable point interaction.

A point interaction at the origin is specified by four real constants
(alpha, beta, gamma, delta) subject to alpha*gamma - beta*delta = 1, an
overall phase angle theta, and the particle mass (units with hbar = 1).
The interaction acts through a 2x2 boundary matrix that links the column
(psi', 2*m*psi) on the right of the origin to the same column on the left.

All observable quantities are independent of theta; the wavefunction
itself carries the phase exp(i*theta). Both sign conventions for a real
phase are reachable through the theta field.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import ConstraintViolation, InputError, NonPositiveMass

# Absolute tolerance on the determinant constraint. Parameters are stored
# exactly as given, never projected back onto the constraint surface.
CONSTRAINT_TOL = 1e-12

# |sin theta| below this counts as a real phase; the sign comes from cos theta.
PHASE_TOL = 1e-12

PARAM_FIELDS = ("alpha", "beta", "gamma", "delta", "theta", "mass")


@dataclass(frozen=True)
class InteractionParams:
    """One member of the four-parameter family, plus phase angle and mass."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    theta: float
    mass: float

    @property
    def phase(self) -> complex:
        """exp(i*theta), the overall phase of the boundary matrix."""
        return cmath.exp(1j * self.theta)

    def constraint_defect(self) -> float:
        """|alpha*gamma - beta*delta - 1|, zero for a valid member."""
        return abs(self.alpha * self.gamma - self.beta * self.delta - 1.0)

    def real_phase_sign(self) -> int | None:
        """+1 or -1 when exp(i*theta) is real within tolerance, else None."""
        if abs(math.sin(self.theta)) > PHASE_TOL:
            return None
        return 1 if math.cos(self.theta) > 0.0 else -1

    def abcd(self) -> tuple[float, float, float, float]:
        """The (a, b, c, d) aliases used by the 2m = 1 convention."""
        return (self.gamma, self.delta, self.beta, self.alpha)

    def to_dict(self) -> dict:
        """Plain dict with the JSON field names consumed by the CLI."""
        return asdict(self)


@dataclass(frozen=True, eq=False)
class BoundaryMatrix:
    """The 2x2 complex matrix acting on the column (psi', 2*m*psi)."""

    entries: np.ndarray

    @property
    def determinant(self) -> complex:
        e = self.entries
        return e[0, 0] * e[1, 1] - e[0, 1] * e[1, 0]


def validate_params(
    alpha: float,
    beta: float,
    gamma: float,
    delta: float,
    theta: float,
    mass: float,
) -> InteractionParams:
    """Check the inputs and return them packaged, or raise.

    Raises ConstraintViolation when alpha*gamma - beta*delta strays from 1
    by more than CONSTRAINT_TOL, and NonPositiveMass when mass <= 0. The
    values are never adjusted.
    """
    defect = abs(alpha * gamma - beta * delta - 1.0)
    if not defect <= CONSTRAINT_TOL:
        raise ConstraintViolation(
            f"alpha*gamma - beta*delta = {alpha * gamma - beta * delta!r}, "
            f"must equal 1 within {CONSTRAINT_TOL}"
        )
    if not mass > 0.0:
        raise NonPositiveMass(f"mass must be positive, got {mass!r}")
    return InteractionParams(alpha, beta, gamma, delta, theta, mass)


def from_abcd(
    a: float, b: float, c: float, d: float, theta: float, mass: float
) -> InteractionParams:
    """Build params from the (a, b, c, d) aliases: gamma=a, delta=b, beta=c, alpha=d."""
    return validate_params(alpha=d, beta=c, gamma=a, delta=b, theta=theta, mass=mass)


def canonical_interaction(kind: str, strength: float, mass: float) -> InteractionParams:
    """One of the named special interactions, with phase fixed to exp(i*theta) = -1.

    kind "delta": the contact potential g*delta(x); alpha = gamma = -1,
    beta = -g, delta = 0.
    kind "delta_prime": continuous derivative, discontinuous wavefunction;
    alpha = gamma = -1, beta = 0, delta = -c. Despite the conventional
    name this is not the derivative of a delta function.
    kind "anti_delta": the sign-reversed contact potential, alpha = gamma = 1,
    beta = g, delta = 0. It differs from "delta" only through the phase
    convention, so the strength g plays the same role in both.
    """
    theta = math.pi
    if kind == "delta":
        return validate_params(-1.0, -strength, -1.0, 0.0, theta, mass)
    if kind == "delta_prime":
        return validate_params(-1.0, 0.0, -1.0, -strength, theta, mass)
    if kind == "anti_delta":
        return validate_params(1.0, strength, 1.0, 0.0, theta, mass)
    raise InputError(f"unknown interaction kind {kind!r}")


def boundary_matrix(params: InteractionParams) -> BoundaryMatrix:
    """The phase times [[alpha, beta], [delta, gamma]], frozen read-only."""
    ph = params.phase
    entries = np.array(
        [
            [ph * params.alpha, ph * params.beta],
            [ph * params.delta, ph * params.gamma],
        ],
        dtype=complex,
    )
    entries.setflags(write=False)
    return BoundaryMatrix(entries)


def apply_boundary(
    params: InteractionParams, psi_prime_minus: complex, psi_minus: complex
) -> tuple[complex, complex]:
    """Propagate (psi'(-0), psi(-0)) across the origin to (psi'(+0), psi(+0)).

    The matrix acts on the column (psi', 2*m*psi); the returned second
    component is divided back down to a plain wavefunction value.
    """
    m2 = 2.0 * params.mass
    column = np.array([psi_prime_minus, m2 * psi_minus], dtype=complex)
    out = boundary_matrix(params).entries @ column
    return complex(out[0]), complex(out[1]) / m2


def params_from_dict(data: dict) -> InteractionParams:
    """Parse and validate the CLI JSON object {alpha, beta, gamma, delta, theta, mass}."""
    if not isinstance(data, dict):
        raise InputError("parameter JSON must be an object")
    missing = [k for k in PARAM_FIELDS if k not in data]
    if missing:
        raise InputError(f"parameter JSON missing fields: {', '.join(missing)}")
    values = {}
    for key in PARAM_FIELDS:
        try:
            values[key] = float(data[key])
        except (TypeError, ValueError) as exc:
            raise InputError(f"parameter field {key!r} is not a number") from exc
    return validate_params(**values)
