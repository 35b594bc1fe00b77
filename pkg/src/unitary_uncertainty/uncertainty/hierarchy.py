"""Hierarchical lower bounds built from the n largest perpendicular summands."""

from __future__ import annotations

import math
from itertools import combinations
from typing import Sequence, Tuple

from unitary_uncertainty.core.errors import InvalidOperatorError, SubsetSizeError
from unitary_uncertainty.core.models import BoundName, BoundValue, SignChoice
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, OperatorKind, PureState
from unitary_uncertainty.uncertainty.equalities import (
    perpendicular_terms,
    product_perpendicular_terms,
    standard_deviations,
)
from unitary_uncertainty.uncertainty.variance import covariance


def check_order(n: int, size: int) -> None:
    if not 1 <= n <= size:
        raise SubsetSizeError(f"n must satisfy 1 <= n <= {size}, got {n}")


def top_n_subset(terms: Sequence[float], n: int) -> Tuple[Tuple[int, ...], float]:
    """
    Maximize the subset sum over all n-element index sets.

    The summands are nonnegative, so the maximizer is the n largest terms;
    ties go to the lower index, which also makes the returned set the
    lexicographically smallest maximizer.
    """
    check_order(n, len(terms))
    order = sorted(range(len(terms)), key=lambda k: (-terms[k], k))
    subset = tuple(sorted(order[:n]))
    return subset, math.fsum(terms[k] for k in subset)


def brute_force_subset_max(terms: Sequence[float], n: int) -> Tuple[Tuple[int, ...], float]:
    """Enumerate every n-element subset; the first strict maximum in lexicographic order wins."""
    check_order(n, len(terms))
    best_subset: Tuple[int, ...] = ()
    best_value = -math.inf
    for subset in combinations(range(len(terms)), n):
        value = math.fsum(terms[k] for k in subset)
        if value > best_value:
            best_subset, best_value = subset, value
    return best_subset, best_value


def _require_unitary(*ops: Operator) -> None:
    for op in ops:
        if op.kind is not OperatorKind.UNITARY:
            raise InvalidOperatorError(f"hierarchical bounds need unitary operators, got {op.kind.value}")


def hierarchical_sum_bound(
    u: Operator,
    v: Operator,
    psi: PureState,
    basis: ComplementBasis,
    n: int,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundValue:
    _require_unitary(u, v)
    check_order(n, len(basis))
    terms = perpendicular_terms(u, v, psi, basis, s, tol=tol).tolist()
    subset, partial = top_n_subset(terms, n)
    value = partial - 2.0 * s.factor * covariance(u, v, psi, tol=tol).imag
    return BoundValue(BoundName.UURS_N, value, sign_used=s, subset_used=subset, order=n)


def hierarchical_product_bound(
    u: Operator,
    v: Operator,
    psi: PureState,
    basis: ComplementBasis,
    n: int,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundValue:
    _require_unitary(u, v)
    check_order(n, len(basis))
    d_u, d_v = standard_deviations(u, v, psi, tol=tol)
    terms = product_perpendicular_terms(u, v, psi, basis, s, tol=tol).tolist()
    subset, partial = top_n_subset(terms, n)
    value = 0.5 * partial / (d_u * d_v) - s.factor * covariance(u, v, psi, tol=tol).imag
    return BoundValue(BoundName.UURP_N, value, sign_used=s, subset_used=subset, order=n)
