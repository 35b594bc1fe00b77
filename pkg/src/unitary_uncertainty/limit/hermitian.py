"""
Hermitian uncertainty equalities reached in the large-d limit.

For Hermitian u, v and the upper sign,

    du^2 + dv^2 = sum_k |<psi_k|(u - iv)|psi>|^2 + i<[u, v]>
    du dv       = (i/2)<[u, v]> / (1 - (1/2) sum_k |<psi_k|(u/du - iv/dv)|psi>|^2)

and the lower sign flips i. <[u, v]> is purely imaginary, so i<[u, v]> is
-Im<[u, v]>.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence, Tuple

import numpy as np

from unitary_uncertainty.core.errors import (
    DegenerateDenominatorError,
    InvalidOperatorError,
    NumericalInvariantError,
)
from unitary_uncertainty.core.models import DftPair, HermitianPair, SignChoice
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.logm import principal_log_generator
from unitary_uncertainty.linalg.ops import check_dims
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, OperatorKind, PureState
from unitary_uncertainty.uncertainty.baselines import check_perpendicular
from unitary_uncertainty.uncertainty.equalities import check_anchor
from unitary_uncertainty.uncertainty.kernels import hermitian_quotient_parts, hermitian_sum_values, overlap_terms
from unitary_uncertainty.uncertainty.variance import general_variance, nondegenerate_deviations


def hermitian_pair_from_dft(
    pair: DftPair,
    *,
    allow_branch_cut: bool = False,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> HermitianPair:
    """u, v with clock = exp(i sqrt(2pi/d) u) and shift = exp(i sqrt(2pi/d) v); even d hits the branch cut."""
    scale = math.sqrt(2.0 * math.pi / pair.dim)
    u = principal_log_generator(pair.clock, scale, allow_branch_cut=allow_branch_cut, tol=tol)
    v = principal_log_generator(pair.shift, scale, allow_branch_cut=allow_branch_cut, tol=tol)
    return HermitianPair(u=u, v=v, scale=scale, source=pair)


def _require_hermitian(u: Operator, v: Operator) -> None:
    for name, op in (("u", u), ("v", v)):
        if op.kind is not OperatorKind.HERMITIAN:
            raise InvalidOperatorError(f"{name} must be Hermitian, got {op.kind.value}")


def commutator_expectation(u: Operator, v: Operator, psi: PureState, *, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    """<[u, v]>; the real part must vanish for Hermitian u, v."""
    _require_hermitian(u, v)
    check_dims(u, v, psi)
    u_psi, v_psi = u.apply(psi), v.apply(psi)
    value = complex(np.vdot(u_psi, v_psi) - np.vdot(v_psi, u_psi))
    if abs(value.real) > tol.orth_tol:
        raise NumericalInvariantError(f"<[u, v]> has a real part {value.real:.3e}")
    return complex(0.0, value.imag)


def hermitian_deviations(
    u: Operator,
    v: Operator,
    psi: PureState,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Tuple[float, float]:
    return nondegenerate_deviations(general_variance(u, psi, tol=tol), general_variance(v, psi, tol=tol), tol, label="du*dv")


def hermitian_sum_equality(
    u: Operator,
    v: Operator,
    psi: PureState,
    basis: ComplementBasis,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    commutator_expectation(u, v, psi, tol=tol)
    check_anchor(basis, psi)
    return float(hermitian_sum_values(u.apply(psi), v.apply(psi), basis.vectors, s.factor))


def _quotient_parts(
    u: Operator,
    v: Operator,
    psi: PureState,
    vectors: np.ndarray,
    s: SignChoice,
    tol: Tolerances,
) -> Tuple[float, float]:
    commutator_expectation(u, v, psi, tol=tol)
    d_u, d_v = hermitian_deviations(u, v, psi, tol=tol)
    numerator, denominator = hermitian_quotient_parts(u.apply(psi), v.apply(psi), vectors, s.factor, d_u, d_v)
    return float(numerator), float(denominator)


def hermitian_product_equality(
    u: Operator,
    v: Operator,
    psi: PureState,
    basis: ComplementBasis,
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """
    Quotient form of du dv.

    The denominator equals -(s/2) Im<[u, v]> / (du dv), so it vanishes
    together with <[u, v]>; that case raises DegenerateDenominatorError.
    """
    check_anchor(basis, psi)
    numerator, denominator = _quotient_parts(u, v, psi, basis.vectors, s, tol)
    if abs(denominator) <= tol.degenerate_tol:
        raise DegenerateDenominatorError(f"quotient denominator {denominator:.3e} vanishes")
    return numerator / denominator


def hermitian_truncated_relations(
    u: Operator,
    v: Operator,
    psi: PureState,
    perp: Sequence[complex],
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Tuple[float, Optional[float]]:
    """
    One-term truncations (sum, product) of the Hermitian equalities.

    Dropping summands raises the quotient denominator, so the product
    truncation is a lower bound only when its numerator is positive; for the
    other sign it is returned as None.
    """
    vec = check_perpendicular(psi, np.asarray(perp), tol).reshape(1, -1)
    comm = commutator_expectation(u, v, psi, tol=tol)
    f = u.apply(psi) - 1j * s.factor * v.apply(psi)
    sum_bound = float(overlap_terms(vec, f)[0]) - s.factor * comm.imag

    numerator, denominator = _quotient_parts(u, v, psi, vec, s, tol)
    if numerator <= 0.0 or denominator <= tol.degenerate_tol:
        return sum_bound, None
    return sum_bound, numerator / denominator
