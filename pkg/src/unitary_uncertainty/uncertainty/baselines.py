"""Previously known unitary uncertainty bounds used as comparison baselines."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from unitary_uncertainty.core.errors import CommutationError, NumericalInvariantError, PerpendicularStateError
from unitary_uncertainty.core.models import BoundName, BoundValue, MsuurCheck, SignChoice
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.ops import check_dims, expectation
from unitary_uncertainty.linalg.types import Operator, PureState
from unitary_uncertainty.operators.dft import commutation_phase, k_from_phase
from unitary_uncertainty.uncertainty.variance import covariance, unitary_variance


def bpuur1_bound(u: Operator, v: Operator, psi: PureState, *, tol: Tolerances = DEFAULT_TOLERANCES) -> BoundValue:
    """1 + |<U^dag V>|^2 - <U^dag V><U><V^dag> - <V><U^dag><V^dag U>."""
    check_dims(u, v, psi)
    e_uv = complex(np.vdot(u.apply(psi), v.apply(psi)))
    e_u = expectation(u, psi)
    e_v = expectation(v, psi)
    cross = e_uv * e_u * e_v.conjugate()
    value = 1.0 + abs(e_uv) ** 2 - cross - e_v * e_u.conjugate() * e_uv.conjugate()
    if abs(value.imag) > tol.orth_tol:
        raise NumericalInvariantError(f"BPUUR1 has a residual imaginary part {value.imag:.3e}")
    return BoundValue(BoundName.BPUUR1, value.real)


def check_perpendicular(psi: PureState, perp: np.ndarray, tol: Tolerances) -> np.ndarray:
    vec = np.asarray(perp, dtype=np.complex128)
    if vec.shape != (psi.dim,):
        raise PerpendicularStateError(f"perpendicular vector shape {vec.shape} does not match dim {psi.dim}")
    if abs(float(np.linalg.norm(vec)) - 1.0) > tol.norm_tol:
        raise PerpendicularStateError("perpendicular vector is not normalized")
    if abs(np.vdot(vec, psi.amplitudes)) > tol.orth_tol:
        raise PerpendicularStateError("perpendicular vector is not orthogonal to the state")
    return vec


def bpuur2_bound(
    u: Operator,
    v: Operator,
    psi: PureState,
    perp: Sequence[complex],
    s: SignChoice,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BoundValue:
    """|<perp|(U - i s V)|psi>|^2 - 2 s Im Cov(U, V) for one state orthogonal to psi."""
    check_dims(u, v, psi)
    vec = check_perpendicular(psi, np.asarray(perp), tol)
    f = u.apply(psi) - 1j * s.factor * v.apply(psi)
    term = abs(np.vdot(vec, f)) ** 2
    value = term - 2.0 * s.factor * covariance(u, v, psi, tol=tol).imag
    return BoundValue(BoundName.BPUUR2, value, sign_used=s)


def buur_bound(u: Operator, v: Operator, psi: PureState, *, tol: Tolerances = DEFAULT_TOLERANCES) -> BoundValue:
    """|Cov(U, V)|^2, a lower bound on dU^2 dV^2."""
    return BoundValue(BoundName.BUUR, abs(covariance(u, v, psi, tol=tol)) ** 2)


def msuur_check(
    u: Operator,
    v: Operator,
    psi: PureState,
    k: float,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> MsuurCheck:
    """
    Evaluate (1+2K) x y + K^2 (x + y) - K^2 >= 0 with x = dU^2, y = dV^2.

    K must match the commutation phase of the pair. The residual is the value
    divided by K^2, so it keeps a finite limit x + y - 1 for K = infinity
    (phi = pi); for K = 0 the relation reduces to x y >= 0.
    """
    if math.isnan(k) or k < 0.0:
        raise ValueError(f"K must be nonnegative, got {k!r}")
    expected = k_from_phase(commutation_phase(u, v, tol=tol), tol=tol)
    if math.isinf(k) != math.isinf(expected) or (
        not math.isinf(k) and not math.isclose(k, expected, rel_tol=1e-8, abs_tol=tol.unitary_tol)
    ):
        raise CommutationError(f"K = {k!r} does not match the commutation phase of the pair (K = {expected!r})")

    x = unitary_variance(u, psi, tol=tol).value
    y = unitary_variance(v, psi, tol=tol).value
    if math.isinf(k):
        raw = None
        residual = x + y - 1.0
    elif k == 0.0:
        raw = x * y
        residual = x * y
    else:
        raw = (1.0 + 2.0 * k) * x * y + k * k * (x + y) - k * k
        residual = x + y - 1.0 + (1.0 / (k * k) + 2.0 / k) * x * y
    holds = (residual if raw is None else raw) >= -tol.eq_tol
    return MsuurCheck(k=k, value=raw, residual=residual, holds=holds)


def msuur_sum_lower_bound(k: float) -> float:
    """
    Minimum of x + y over (1+2K) x y + K^2 (x + y) >= K^2, x, y in [0, 1].

    The boundary is symmetric in x and y and the minimum sits at x = y,
    where it evaluates to 2K / (1 + 2K).
    """
    if math.isnan(k) or k <= 0.0:
        raise ValueError(f"K must be positive, got {k!r}")
    if math.isinf(k):
        return 1.0
    return 2.0 * k / (1.0 + 2.0 * k)
