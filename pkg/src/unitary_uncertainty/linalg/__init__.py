from unitary_uncertainty.linalg.logm import principal_log_generator
from unitary_uncertainty.linalg.ops import check_dims, complete_complement, dominant_axis, expectation
from unitary_uncertainty.linalg.sampling import (
    complement_vectors,
    disk_matrices,
    haar_states,
    haar_unitaries,
    hermitian_matrices,
    random_complement,
    random_hermitian,
    random_operator,
    random_pure_state,
    random_unitary,
)
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, OperatorKind, PureState

__all__ = [
    "ComplementBasis",
    "Operator",
    "OperatorKind",
    "PureState",
    "check_dims",
    "complement_vectors",
    "complete_complement",
    "disk_matrices",
    "dominant_axis",
    "expectation",
    "haar_states",
    "haar_unitaries",
    "hermitian_matrices",
    "principal_log_generator",
    "random_complement",
    "random_hermitian",
    "random_operator",
    "random_pure_state",
    "random_unitary",
]
