from __future__ import annotations

from typing import Callable, List, Optional, Sequence

import numpy as np

from unitary_uncertainty.core.errors import CommutationError, DegenerateVarianceError
from unitary_uncertainty.core.models import BoundName, BoundValue, SignChoice, SignPolicy, UncertaintyReport
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, PureState
from unitary_uncertainty.operators.dft import commutation_phase, k_from_phase
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
    standard_deviations,
    sum_equality_rhs,
)
from unitary_uncertainty.uncertainty.hierarchy import (
    check_order,
    hierarchical_product_bound,
    hierarchical_sum_bound,
    top_n_subset,
)
from unitary_uncertainty.uncertainty.variance import covariance, unitary_variance
from unitary_uncertainty.utils.logging import get_logger

log = get_logger("unitary_uncertainty.uncertainty")

BoundFn = Callable[..., BoundValue]


def best_sign(bound_fn: BoundFn, *args, **kwargs) -> BoundValue:
    """Evaluate bound_fn for both signs (passed as `s=`) and keep the larger; ties go to PLUS."""
    plus = bound_fn(*args, s=SignChoice.PLUS, **kwargs)
    minus = bound_fn(*args, s=SignChoice.MINUS, **kwargs)
    return minus if minus.value > plus.value else plus


def apply_policy(policy: SignPolicy, bound_fn: BoundFn, *args, **kwargs) -> BoundValue:
    fixed = policy.fixed_sign()
    if fixed is None:
        return best_sign(bound_fn, *args, **kwargs)
    return bound_fn(*args, s=fixed, **kwargs)


def bpuur2_best_vector(
    u: Operator,
    v: Operator,
    psi: PureState,
    basis: ComplementBasis,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundValue:
    """BPUUR2 evaluated on the basis vector with the largest perpendicular summand."""
    terms = perpendicular_terms(u, v, psi, basis, s, tol=tol).tolist()
    subset, _ = top_n_subset(terms, 1)
    bound = bpuur2_bound(u, v, psi, basis.vectors[subset[0]], s, tol=tol)
    return BoundValue(bound.name, bound.value, sign_used=s, subset_used=subset)


def full_report(
    u: Operator,
    v: Operator,
    psi: PureState,
    basis: ComplementBasis,
    n_values: Sequence[int],
    *,
    sign_policy: SignPolicy = SignPolicy.BEST,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> UncertaintyReport:
    """
    Evaluate every variance, equality and bound for one (U, V, psi, basis) instance.

    Both signs of each equality are kept. BPUUR2 and the hierarchical bounds
    follow sign_policy. Product-form entries are left out when dU dV is
    degenerate, and the Massar-Spindel entries only appear when the pair has a
    scalar commutation phase.
    """
    for n in n_values:
        check_order(n, len(basis))
    policy = SignPolicy(sign_policy)

    d_u2 = unitary_variance(u, psi, tol=tol)
    d_v2 = unitary_variance(v, psi, tol=tol)
    cov = covariance(u, v, psi, tol=tol)
    try:
        standard_deviations(u, v, psi, tol=tol)
        degenerate = False
    except DegenerateVarianceError:
        degenerate = True

    bounds: List[BoundValue] = []
    for s in SignChoice:
        bounds.append(sum_equality_rhs(u, v, psi, basis, s, tol=tol))
        if not degenerate:
            bounds.append(product_equality_rhs(u, v, psi, basis, s, tol=tol))
    bounds.append(bpuur1_bound(u, v, psi, tol=tol))
    bounds.append(apply_policy(policy, bpuur2_best_vector, u, v, psi, basis, tol=tol))
    bounds.append(buur_bound(u, v, psi, tol=tol))
    for n in n_values:
        bounds.append(apply_policy(policy, hierarchical_sum_bound, u, v, psi, basis, n, tol=tol))
    if degenerate:
        log.debug("Product bounds skipped: dU^2 dV^2 = %.3e", d_u2.value * d_v2.value)
    else:
        for n in n_values:
            bounds.append(apply_policy(policy, hierarchical_product_bound, u, v, psi, basis, n, tol=tol))

    phase: Optional[float] = None
    check = None
    try:
        phase = commutation_phase(u, v, tol=tol)
    except CommutationError:
        log.debug("Pair has no scalar commutation phase; Massar-Spindel entries skipped")
    if phase is not None:
        k = k_from_phase(phase, tol=tol)
        check = msuur_check(u, v, psi, k, tol=tol)
        if k > 0.0:
            bounds.append(BoundValue(BoundName.MSUUR_SUM, msuur_sum_lower_bound(k)))

    return UncertaintyReport(
        dU2=d_u2,
        dV2=d_v2,
        cov=cov,
        bounds=tuple(bounds),
        msuur=check,
        commutation_phase=phase,
    )


def nonzero_term_count(
    u: Operator,
    v: Operator,
    psi: PureState,
    basis: ComplementBasis,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> int:
    """Complement vectors whose overlap with (U -+ iV)|psi> is at least zero_amplitude for either sign."""
    mask = np.zeros(len(basis), dtype=bool)
    for s in SignChoice:
        f = u.apply(psi) - 1j * s.factor * v.apply(psi)
        mask |= np.abs(basis.vectors.conj() @ f) >= tol.zero_amplitude
    return int(np.count_nonzero(mask))
