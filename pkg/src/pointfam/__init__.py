"""Exact solutions for the four-parameter family of point interactions in 1D.

Bound-state spectra, transmission/reflection amplitudes, N-body bound
states, and the three-body no-diffraction test, each backed by
independent first-principles oracles.
"""

__version__ = "0.1.0"

from .core import (
    BoundaryMatrix,
    InteractionParams,
    apply_boundary,
    boundary_matrix,
    canonical_interaction,
    from_abcd,
    params_from_dict,
    validate_params,
)
from .diffraction import (
    DiffractionReport,
    RayKinematics,
    no_diffraction_scan,
    outgoing_amplitudes,
    ray_kinematics,
)
from .many_body import (
    Configuration,
    JacobiCoords,
    NBodyBoundState,
    configuration_of,
    eval_nbody_wavefunction,
    jacobi_transform,
    mcguire_reference,
    nbody_bound_states,
    symmetry_class,
)
from .one_body import (
    BoundState,
    bound_spectrum,
    eval_bound_wavefunction,
    orthogonality_sum,
    phase_diagram_count,
)
from .scattering import ScatteringAmplitudes, amplitudes, unitarity_defect
from .verify import (
    ResidualReport,
    boundary_residual_3body,
    interior_residual,
    oracle_bound_kappas,
    scattering_matching_oracle,
)

__all__ = [
    "BoundaryMatrix",
    "BoundState",
    "Configuration",
    "DiffractionReport",
    "InteractionParams",
    "JacobiCoords",
    "NBodyBoundState",
    "RayKinematics",
    "ResidualReport",
    "ScatteringAmplitudes",
    "amplitudes",
    "apply_boundary",
    "boundary_matrix",
    "boundary_residual_3body",
    "bound_spectrum",
    "canonical_interaction",
    "configuration_of",
    "eval_bound_wavefunction",
    "eval_nbody_wavefunction",
    "from_abcd",
    "interior_residual",
    "jacobi_transform",
    "mcguire_reference",
    "nbody_bound_states",
    "no_diffraction_scan",
    "oracle_bound_kappas",
    "orthogonality_sum",
    "outgoing_amplitudes",
    "params_from_dict",
    "phase_diagram_count",
    "ray_kinematics",
    "scattering_matching_oracle",
    "symmetry_class",
    "unitarity_defect",
    "validate_params",
]
