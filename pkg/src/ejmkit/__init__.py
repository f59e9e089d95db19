"""Generalized three-parameter elegant joint measurement for two qubits."""

from .linalg import dagger, inner, kron, outer, partial_trace
from .states import (
    FiveParams,
    ParameterRangeError,
    concurrence_closed,
    concurrence_numeric,
    ket_m,
    ket_m0,
    ket_m1,
    ket_minus_m,
    m_prime,
    phi_state,
    reduced_bloch,
    unit_vector_m,
)
from .ejm import (
    DegenerateGeometryError,
    EjmBasis,
    EjmParams,
    build_basis,
    completeness_residual,
    gram_matrix,
    phi_z,
    reduced_tetrahedron,
    single_param_reduction,
    tetrahedron_geometry_check,
)
from .circuits import (
    Circuit,
    Gate,
    apply,
    detect_circuit,
    local_unitary_u1,
    local_unitary_u2,
    outcome_probabilities,
    prep_circuit,
)

__all__ = [
    "Circuit",
    "DegenerateGeometryError",
    "EjmBasis",
    "EjmParams",
    "FiveParams",
    "Gate",
    "ParameterRangeError",
    "apply",
    "build_basis",
    "completeness_residual",
    "concurrence_closed",
    "concurrence_numeric",
    "dagger",
    "detect_circuit",
    "gram_matrix",
    "inner",
    "ket_m",
    "ket_m0",
    "ket_m1",
    "ket_minus_m",
    "kron",
    "local_unitary_u1",
    "local_unitary_u2",
    "m_prime",
    "outcome_probabilities",
    "outer",
    "partial_trace",
    "phi_state",
    "phi_z",
    "prep_circuit",
    "reduced_bloch",
    "reduced_tetrahedron",
    "single_param_reduction",
    "tetrahedron_geometry_check",
    "unit_vector_m",
]

__version__ = "0.1.0"
