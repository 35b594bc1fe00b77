from __future__ import annotations

from typing import Tuple

import numpy as np

from unitary_uncertainty.core.errors import DegenerateVarianceError, InvalidOperatorError, NumericalInvariantError
from unitary_uncertainty.core.models import CovarianceValue, VarianceValue
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.ops import check_dims, expectation
from unitary_uncertainty.linalg.types import Operator, OperatorKind, PureState


def _clamped(value: float, tol: Tolerances) -> VarianceValue:
    if value < 0.0:
        if value < -tol.eq_tol:
            raise NumericalInvariantError(f"variance is negative beyond eq_tol: {value!r}")
        value = 0.0
    return VarianceValue(value)


def nondegenerate_deviations(
    var_a: VarianceValue,
    var_b: VarianceValue,
    tol: Tolerances,
    label: str = "dA*dB",
) -> Tuple[float, float]:
    """
    (dA, dB) for a product relation.

    The threshold applies on the variance scale; a roundoff variance of 1e-16
    still has a 1e-8 spread.
    """
    smallest = min(var_a.value, var_b.value)
    d_a, d_b = var_a.std, var_b.std
    if smallest <= tol.degenerate_tol or d_a * d_b <= tol.degenerate_tol:
        raise DegenerateVarianceError(f"trivial case: {label} is not positive (smallest variance {smallest:.3e})")
    return d_a, d_b


def general_variance(a: Operator, psi: PureState, *, tol: Tolerances = DEFAULT_TOLERANCES) -> VarianceValue:
    """<A^dag A> - |<A>|^2 for an arbitrary operator."""
    check_dims(a, psi)
    a_psi = a.apply(psi)
    second = float(np.vdot(a_psi, a_psi).real)
    first = expectation(a, psi)
    return _clamped(second - abs(first) ** 2, tol)


def unitary_variance(u: Operator, psi: PureState, *, tol: Tolerances = DEFAULT_TOLERANCES) -> VarianceValue:
    """1 - |<U>|^2; only valid for unitary operators."""
    if u.kind is not OperatorKind.UNITARY:
        raise InvalidOperatorError(f"unitary_variance needs a unitary operator, got {u.kind.value}")
    value = 1.0 - abs(expectation(u, psi)) ** 2
    if value > 1.0 + tol.norm_tol:
        raise NumericalInvariantError(f"unitary variance exceeds 1: {value!r}")
    return _clamped(min(value, 1.0), tol)


def covariance(a: Operator, b: Operator, psi: PureState, *, tol: Tolerances = DEFAULT_TOLERANCES) -> CovarianceValue:
    """Cov(A, B) = <A^dag B> - <A^dag><B>, with <A^dag> = conj(<A>)."""
    check_dims(a, b, psi)
    cross = complex(np.vdot(a.apply(psi), b.apply(psi)))
    return CovarianceValue(cross - expectation(a, psi).conjugate() * expectation(b, psi))


def visibility(u: Operator, psi: PureState, *, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Interference visibility |<U>|."""
    if u.kind is not OperatorKind.UNITARY:
        raise InvalidOperatorError(f"visibility needs a unitary operator, got {u.kind.value}")
    return min(abs(expectation(u, psi)), 1.0)
