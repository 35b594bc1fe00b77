"""
Sum and product uncertainty equalities for arbitrary operator pairs.

With the paired sign convention, the upper sign (SignChoice.PLUS) reads

    dA^2 + dB^2 = sum_k |<psi_k|(A - iB)|psi>|^2 - 2 Im Cov(A, B)
    dA dB       = sum_k |<psi_k|(dB A - i dA B)|psi>|^2 / (2 dA dB) - Im Cov(A, B)

and the lower sign flips both i and the covariance term. The summands are
the diagonal of f^dag (1 - |psi><psi|) f in the complement basis, so each one
is nonnegative.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from unitary_uncertainty.core.errors import AnchorMismatchError
from unitary_uncertainty.core.models import BoundName, BoundValue, SignChoice
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.ops import check_dims
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, PureState
from unitary_uncertainty.uncertainty.kernels import overlap_terms, product_rhs_values, sum_rhs_values
from unitary_uncertainty.uncertainty.variance import general_variance, nondegenerate_deviations


def check_anchor(basis: ComplementBasis, psi: PureState) -> None:
    if not basis.complements(psi):
        raise AnchorMismatchError("complement basis is not anchored at the given state")


def perpendicular_terms(
    a: Operator,
    b: Operator,
    psi: PureState,
    basis: ComplementBasis,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Nonnegative summands of the sum equality, one per complement vector."""
    check_dims(a, b, psi, basis)
    check_anchor(basis, psi)
    f = a.apply(psi) - 1j * s.factor * b.apply(psi)
    return overlap_terms(basis.vectors, f)


def standard_deviations(
    a: Operator,
    b: Operator,
    psi: PureState,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Tuple[float, float]:
    """(dA, dB), raising DegenerateVarianceError when either variance is at most degenerate_tol."""
    return nondegenerate_deviations(general_variance(a, psi, tol=tol), general_variance(b, psi, tol=tol), tol)


def product_perpendicular_terms(
    a: Operator,
    b: Operator,
    psi: PureState,
    basis: ComplementBasis,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Summands |<psi_k|(dB A - i s dA B)|psi>|^2 of the product equality (not yet divided by 2 dA dB)."""
    check_dims(a, b, psi, basis)
    check_anchor(basis, psi)
    d_a, d_b = standard_deviations(a, b, psi, tol=tol)
    h = d_b * a.apply(psi) - 1j * s.factor * d_a * b.apply(psi)
    return overlap_terms(basis.vectors, h)


def sum_equality_rhs(
    a: Operator,
    b: Operator,
    psi: PureState,
    basis: ComplementBasis,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundValue:
    check_dims(a, b, psi, basis)
    check_anchor(basis, psi)
    value = sum_rhs_values(psi.amplitudes, a.apply(psi), b.apply(psi), basis.vectors, s.factor)
    return BoundValue(BoundName.UUES_RHS, float(value), sign_used=s, subset_used=tuple(range(len(basis))))


def product_equality_rhs(
    a: Operator,
    b: Operator,
    psi: PureState,
    basis: ComplementBasis,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundValue:
    check_dims(a, b, psi, basis)
    check_anchor(basis, psi)
    d_a, d_b = standard_deviations(a, b, psi, tol=tol)
    value = product_rhs_values(psi.amplitudes, a.apply(psi), b.apply(psi), basis.vectors, s.factor, d_a, d_b)
    return BoundValue(BoundName.UUEP_RHS, float(value), sign_used=s, subset_used=tuple(range(len(basis))))
