from __future__ import annotations

import math

import numpy as np

from unitary_uncertainty.core.errors import CommutationError, InvalidOperatorError
from unitary_uncertainty.core.models import DftPair
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.ops import check_dims
from unitary_uncertainty.linalg.types import Operator, OperatorKind


def dft_pair(dim: int, *, tol: Tolerances = DEFAULT_TOLERANCES) -> DftPair:
    """
    Clock and shift related by the discrete Fourier transform.

    clock = diag(1, w, ..., w^(d-1)) with w = exp(2 pi i / d); shift maps
    |k> to |k+1 mod d>, which is sigma_x for d = 2.
    """
    if dim < 2:
        raise InvalidOperatorError(f"dimension must be >= 2, got {dim}")
    phases = 2.0 * np.pi * np.arange(dim) / dim
    clock = Operator.unitary(np.diag(np.exp(1j * phases)), tol=tol)
    shift = Operator.unitary(np.roll(np.eye(dim), 1, axis=0), tol=tol)
    return DftPair(clock=clock, shift=shift, omega=complex(np.exp(2j * np.pi / dim)), tol=tol)


def commutation_phase(u: Operator, v: Operator, *, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """phi in (-pi, pi] with U V = exp(i phi) V U, read off U V U^dag V^dag."""
    for name, op in (("U", u), ("V", v)):
        if op.kind is not OperatorKind.UNITARY:
            raise InvalidOperatorError(f"{name} must be unitary, got {op.kind.value}")
    dim = check_dims(u, v)
    a, b = u.entries, v.entries
    group_commutator = a @ b @ a.conj().T @ b.conj().T
    c = complex(np.trace(group_commutator)) / dim
    residual = float(np.max(np.abs(group_commutator - c * np.eye(dim))))
    if residual > tol.unitary_tol or abs(abs(c) - 1.0) > tol.unitary_tol:
        raise CommutationError(f"U V U^dag V^dag is not a scalar phase (residual {residual:.3e})")
    phi = math.atan2(c.imag, c.real)
    if abs(phi + math.pi) <= tol.branch_tol:
        phi = math.pi
    return phi


def k_from_phase(phi: float, *, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """K = tan(|phi|/2); infinite for phi at pi."""
    half = abs(phi) / 2.0
    if abs(abs(phi) - math.pi) <= tol.branch_tol:
        return math.inf
    return math.tan(half)
