"""The one-parameter state family cos(theta)|0> - sin(theta)|d-1> and its canonical complement."""

from __future__ import annotations

import math

import numpy as np

from unitary_uncertainty.core.errors import InvalidStateError
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.types import ComplementBasis, PureState


def _check_args(dim: int, theta: float) -> None:
    if dim < 2:
        raise InvalidStateError(f"dimension must be >= 2, got {dim}")
    if not 0.0 <= theta <= math.pi / 2:
        raise InvalidStateError(f"theta must lie in [0, pi/2], got {theta!r}")


def example_state(dim: int, theta: float, *, tol: Tolerances = DEFAULT_TOLERANCES) -> PureState:
    _check_args(dim, theta)
    amps = np.zeros(dim, dtype=np.complex128)
    amps[0] = math.cos(theta)
    amps[dim - 1] = -math.sin(theta)
    return PureState(amps, tol=tol)


def canonical_complement(dim: int, theta: float, *, tol: Tolerances = DEFAULT_TOLERANCES) -> ComplementBasis:
    """[sin(theta)|0> + cos(theta)|d-1>, |1>, ..., |d-2>]."""
    psi = example_state(dim, theta, tol=tol)
    vectors = np.zeros((dim - 1, dim), dtype=np.complex128)
    vectors[0, 0] = math.sin(theta)
    vectors[0, dim - 1] = math.cos(theta)
    for row, axis in enumerate(range(1, dim - 1), start=1):
        vectors[row, axis] = 1.0
    return ComplementBasis(vectors, psi, tol)
