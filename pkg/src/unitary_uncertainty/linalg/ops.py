from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

from unitary_uncertainty.core.errors import DimensionMismatchError, InvalidStateError
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, PureState
from unitary_uncertainty.utils.logging import get_logger

log = get_logger("unitary_uncertainty.linalg")


def check_dims(*items) -> int:
    """Return the common dimension of states/operators or raise DimensionMismatchError."""
    dims = {item.dim for item in items}
    if len(dims) != 1:
        raise DimensionMismatchError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def expectation(op: Operator, psi: PureState) -> complex:
    """<psi|op|psi>."""
    check_dims(op, psi)
    value = complex(np.vdot(psi.amplitudes, op.entries @ psi.amplitudes))
    if not np.isfinite(value.real) or not np.isfinite(value.imag):
        raise InvalidStateError("expectation value is not finite")
    return value


def dominant_axis(psi: PureState) -> int:
    """Index of the largest-modulus amplitude; the lowest index wins ties."""
    return int(np.argmax(np.abs(psi.amplitudes)))


def complete_complement(
    psi: PureState,
    seed_vectors: Optional[Sequence[Sequence[complex]]] = None,
    *,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> ComplementBasis:
    """
    Complete psi to an orthonormal basis and return the d-1 complement vectors.

    Candidates are taken in order: the seed vectors, then the computational
    axes with the dominant axis of psi moved to the end. Each candidate is
    orthogonalized twice (modified Gram-Schmidt with re-orthogonalization)
    against psi and the vectors already accepted; candidates whose projected
    norm drops below orth_tol are skipped.
    """
    d = psi.dim
    candidates: List[np.ndarray] = []
    for seed in seed_vectors or []:
        vec = np.asarray(seed, dtype=np.complex128)
        if vec.shape != (d,):
            raise DimensionMismatchError(f"seed vector shape {vec.shape} does not match dim {d}")
        candidates.append(vec)

    dropped = dominant_axis(psi)
    axes = [k for k in range(d) if k != dropped] + [dropped]
    candidates.extend(np.eye(d, dtype=np.complex128)[k] for k in axes)

    accepted: List[np.ndarray] = [psi.amplitudes]
    for idx, cand in enumerate(candidates):
        if len(accepted) == d:
            break
        v = cand.copy()
        for _ in range(2):
            for q in accepted:
                v = v - np.vdot(q, v) * q
        norm = float(np.linalg.norm(v))
        if norm < tol.orth_tol:
            log.debug("Degenerate complement candidate %d skipped (projected norm %.3e)", idx, norm)
            continue
        accepted.append(v / norm)

    return ComplementBasis(np.array(accepted[1:]), psi, tol)
