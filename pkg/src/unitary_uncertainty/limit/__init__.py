from unitary_uncertainty.limit.convergence import (
    DecaySummary,
    convergence_study,
    decay_summary,
    localized_state,
    relative_error,
)
from unitary_uncertainty.limit.hermitian import (
    commutator_expectation,
    hermitian_pair_from_dft,
    hermitian_product_equality,
    hermitian_sum_equality,
    hermitian_truncated_relations,
)

__all__ = [
    "DecaySummary",
    "commutator_expectation",
    "convergence_study",
    "decay_summary",
    "hermitian_pair_from_dft",
    "hermitian_product_equality",
    "hermitian_sum_equality",
    "hermitian_truncated_relations",
    "localized_state",
    "relative_error",
]
