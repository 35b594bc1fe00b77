from unitary_uncertainty.uncertainty.baselines import (
    bpuur1_bound,
    bpuur2_bound,
    buur_bound,
    msuur_check,
    msuur_sum_lower_bound,
)
from unitary_uncertainty.uncertainty.equalities import (
    perpendicular_terms,
    product_equality_rhs,
    product_perpendicular_terms,
    sum_equality_rhs,
)
from unitary_uncertainty.uncertainty.hierarchy import (
    brute_force_subset_max,
    hierarchical_product_bound,
    hierarchical_sum_bound,
    top_n_subset,
)
from unitary_uncertainty.uncertainty.report import best_sign, full_report, nonzero_term_count
from unitary_uncertainty.uncertainty.variance import covariance, general_variance, unitary_variance, visibility

__all__ = [
    "best_sign",
    "bpuur1_bound",
    "bpuur2_bound",
    "brute_force_subset_max",
    "buur_bound",
    "covariance",
    "full_report",
    "general_variance",
    "hierarchical_product_bound",
    "hierarchical_sum_bound",
    "msuur_check",
    "msuur_sum_lower_bound",
    "nonzero_term_count",
    "perpendicular_terms",
    "product_equality_rhs",
    "product_perpendicular_terms",
    "sum_equality_rhs",
    "top_n_subset",
    "unitary_variance",
    "visibility",
]
