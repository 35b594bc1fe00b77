from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from unitary_uncertainty.core.errors import (
    AnchorMismatchError,
    DimensionMismatchError,
    InvalidOperatorError,
    InvalidStateError,
)
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances


def _frozen_array(values, ndim: int, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128, copy=True)
    if arr.ndim != ndim:
        raise InvalidStateError(f"{what} must be {ndim}-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidStateError(f"{what} contains NaN or Inf")
    arr.setflags(write=False)
    return arr


class OperatorKind(str, Enum):
    """Validated tag carried by an Operator."""

    GENERAL = "general"
    UNITARY = "unitary"
    HERMITIAN = "hermitian"


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized complex amplitude vector of dimension d >= 2."""

    amplitudes: np.ndarray
    tol: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self) -> None:
        amps = _frozen_array(self.amplitudes, 1, "state amplitudes")
        if amps.shape[0] < 2:
            raise InvalidStateError(f"state dimension must be >= 2, got {amps.shape[0]}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > self.tol.norm_tol:
            raise InvalidStateError(f"state is not normalized: |psi| = {norm!r}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_vector(cls, vector: Sequence[complex], *, tol: Tolerances = DEFAULT_TOLERANCES) -> "PureState":
        """Normalize an arbitrary nonzero vector into a state."""
        vec = np.asarray(vector, dtype=np.complex128)
        norm = np.linalg.norm(vec)
        if not np.isfinite(norm) or norm == 0.0:
            raise InvalidStateError("cannot normalize a zero or non-finite vector")
        return cls(vec / norm, tol=tol)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def phase_shifted(self, alpha: float) -> "PureState":
        return PureState(np.exp(1j * alpha) * self.amplitudes, tol=self.tol)


@dataclass(frozen=True, eq=False)
class Operator:
    """Dense d x d complex matrix with a validated kind tag."""

    entries: np.ndarray
    kind: OperatorKind = OperatorKind.GENERAL
    tol: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self) -> None:
        m = _frozen_array(self.entries, 2, "operator entries")
        if m.shape[0] != m.shape[1]:
            raise InvalidOperatorError(f"operator must be square, got shape {m.shape}")
        kind = OperatorKind(self.kind)
        if kind is OperatorKind.UNITARY:
            dev = unitarity_deviation(m)
            if dev > self.tol.unitary_tol:
                raise InvalidOperatorError(f"operator is not unitary: max|U^dag U - I| = {dev:.3e}")
        elif kind is OperatorKind.HERMITIAN:
            dev = hermiticity_deviation(m)
            if dev > self.tol.unitary_tol:
                raise InvalidOperatorError(f"operator is not Hermitian: max|A - A^dag| = {dev:.3e}")
        object.__setattr__(self, "entries", m)
        object.__setattr__(self, "kind", kind)

    @classmethod
    def general(cls, entries, *, tol: Tolerances = DEFAULT_TOLERANCES) -> "Operator":
        return cls(entries, OperatorKind.GENERAL, tol)

    @classmethod
    def unitary(cls, entries, *, tol: Tolerances = DEFAULT_TOLERANCES) -> "Operator":
        return cls(entries, OperatorKind.UNITARY, tol)

    @classmethod
    def hermitian(cls, entries, *, tol: Tolerances = DEFAULT_TOLERANCES) -> "Operator":
        return cls(entries, OperatorKind.HERMITIAN, tol)

    @classmethod
    def identity(cls, dim: int, *, tol: Tolerances = DEFAULT_TOLERANCES) -> "Operator":
        return cls(np.eye(dim), OperatorKind.UNITARY, tol)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def dag(self) -> "Operator":
        """Adjoint; the unitary and Hermitian tags are preserved."""
        return Operator(self.entries.conj().T, self.kind, self.tol)

    def apply(self, psi: PureState) -> np.ndarray:
        if psi.dim != self.dim:
            raise DimensionMismatchError(f"operator dim {self.dim} != state dim {psi.dim}")
        return self.entries @ psi.amplitudes


@dataclass(frozen=True, eq=False)
class ComplementBasis:
    """Ordered orthonormal basis (rows of `vectors`) of the orthogonal complement of `anchor`."""

    vectors: np.ndarray
    anchor: PureState
    tol: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self) -> None:
        vecs = _frozen_array(self.vectors, 2, "complement vectors")
        d = self.anchor.dim
        if vecs.shape != (d - 1, d):
            raise AnchorMismatchError(f"complement of a dim-{d} state needs shape ({d - 1}, {d}), got {vecs.shape}")
        validate_complement(vecs, self.anchor.amplitudes, self.tol)
        object.__setattr__(self, "vectors", vecs)

    @property
    def dim(self) -> int:
        return self.anchor.dim

    def __len__(self) -> int:
        return int(self.vectors.shape[0])

    def complements(self, psi: PureState) -> bool:
        """True when every basis vector is orthogonal to psi (phase of psi is irrelevant)."""
        if psi.dim != self.dim:
            return False
        overlaps = self.vectors.conj() @ psi.amplitudes
        return bool(np.max(np.abs(overlaps)) <= self.tol.orth_tol)


def unitarity_deviation(m: np.ndarray) -> float:
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


def hermiticity_deviation(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def validate_complement(vectors: np.ndarray, anchor: np.ndarray, tol: Tolerances) -> None:
    """Check unit norms, mutual orthogonality and completeness of a complement basis."""
    norms = np.linalg.norm(vectors, axis=1)
    if np.any(np.abs(norms - 1.0) > tol.norm_tol):
        raise AnchorMismatchError(f"complement vectors are not unit-norm: {norms!r}")

    gram = vectors.conj() @ vectors.T
    off = gram - np.diag(np.diag(gram))
    if off.size and np.max(np.abs(off)) > tol.orth_tol:
        raise AnchorMismatchError("complement vectors are not mutually orthogonal")

    overlaps = vectors.conj() @ anchor
    if np.max(np.abs(overlaps)) > tol.orth_tol:
        raise AnchorMismatchError("complement vectors are not orthogonal to the anchor state")

    d = anchor.shape[0]
    residual = np.eye(d) - np.outer(anchor, anchor.conj()) - vectors.T @ vectors.conj()
    if np.max(np.abs(residual)) > tol.orth_tol:
        raise AnchorMismatchError("complement projectors do not sum to 1 - |psi><psi|")
