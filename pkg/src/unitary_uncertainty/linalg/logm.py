from __future__ import annotations

import numpy as np
from scipy.linalg import expm, schur

from unitary_uncertainty.core.errors import BranchCutError, InvalidOperatorError, LogRoundTripError
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.types import Operator, OperatorKind


def principal_log_generator(
    u_op: Operator,
    scale: float,
    *,
    allow_branch_cut: bool = False,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Operator:
    """
    Hermitian h with exp(i * scale * h) == u_op on the principal branch.

    The unitary is diagonalized by a complex Schur decomposition, which is
    diagonal with a unitary change of basis for normal input. Eigenphases are
    taken in (-pi, pi]; a phase within branch_tol of +-pi raises
    BranchCutError unless allow_branch_cut is set, in which case it is pinned
    to +pi.
    """
    if u_op.kind is not OperatorKind.UNITARY:
        raise InvalidOperatorError(f"principal_log_generator needs a unitary operator, got {u_op.kind.value}")
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale!r}")

    t, z = schur(u_op.entries, output="complex")
    eigenvalues = np.diag(t)
    phases = np.angle(eigenvalues)

    on_cut = np.abs(np.abs(phases) - np.pi) <= tol.branch_tol
    if np.any(on_cut):
        if not allow_branch_cut:
            raise BranchCutError(
                f"eigenphase(s) at the branch cut: {phases[on_cut].tolist()} (dim {u_op.dim})"
            )
        phases = np.where(on_cut, np.pi, phases)

    h = (z * (phases / scale)) @ z.conj().T
    h = 0.5 * (h + h.conj().T)

    deviation = float(np.max(np.abs(expm(1j * scale * h) - u_op.entries)))
    if deviation > tol.log_tol:
        raise LogRoundTripError(f"exp(i*scale*h) misses the input by {deviation:.3e}")

    return Operator.hermitian(h, tol=tol)
