"""Seeded Haar sampling of states, unitaries and auxiliary random operators."""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np
from scipy.linalg import qr

from unitary_uncertainty.core.errors import InvalidStateError
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.ops import complete_complement
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, PureState

Seed = Union[int, Sequence[int]]


def _rng(seed: Seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _check_dim(dim: int) -> None:
    if dim < 2:
        raise InvalidStateError(f"dimension must be >= 2, got {dim}")


def _ginibre(rng: np.random.Generator, *shape: int) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_pure_state(dim: int, seed: Seed, *, tol: Tolerances = DEFAULT_TOLERANCES) -> PureState:
    """Haar-uniform state: a normalized complex Gaussian vector."""
    _check_dim(dim)
    return PureState.from_vector(_ginibre(_rng(seed), dim), tol=tol)


def random_unitary(dim: int, seed: Seed, *, tol: Tolerances = DEFAULT_TOLERANCES) -> Operator:
    """Haar-uniform unitary: QR of a Ginibre matrix with the phases of diag(R) divided out."""
    _check_dim(dim)
    q, r = qr(_ginibre(_rng(seed), dim, dim))
    d = np.diag(r)
    q = q * (d / np.abs(d))
    return Operator.unitary(q, tol=tol)


def random_hermitian(dim: int, seed: Seed, *, tol: Tolerances = DEFAULT_TOLERANCES) -> Operator:
    _check_dim(dim)
    g = _ginibre(_rng(seed), dim, dim)
    return Operator.hermitian(0.5 * (g + g.conj().T), tol=tol)


def random_operator(dim: int, seed: Seed, *, tol: Tolerances = DEFAULT_TOLERANCES) -> Operator:
    """General operator with entries drawn uniformly from the closed unit disk."""
    _check_dim(dim)
    rng = _rng(seed)
    radius = np.sqrt(rng.uniform(0.0, 1.0, (dim, dim)))
    angle = rng.uniform(-np.pi, np.pi, (dim, dim))
    return Operator.general(radius * np.exp(1j * angle), tol=tol)


def random_complement(psi: PureState, seed: Seed, *, tol: Tolerances = DEFAULT_TOLERANCES) -> ComplementBasis:
    """Complement basis of psi seeded by d-1 Gaussian vectors."""
    seeds = _ginibre(_rng(seed), psi.dim - 1, psi.dim)
    return complete_complement(psi, list(seeds), tol=tol)


# Batched draws for the verification suite: one generator, leading axis = trial.


def _phase_fixed_q(columns: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(columns)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def haar_states(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """(count, dim) Haar-uniform unit vectors."""
    _check_dim(dim)
    g = _ginibre(rng, count, dim)
    return g / np.linalg.norm(g, axis=-1, keepdims=True)


def haar_unitaries(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """(count, dim, dim) Haar-uniform unitaries."""
    _check_dim(dim)
    return _phase_fixed_q(_ginibre(rng, count, dim, dim))


def hermitian_matrices(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    _check_dim(dim)
    g = _ginibre(rng, count, dim, dim)
    return 0.5 * (g + np.conj(np.swapaxes(g, -1, -2)))


def disk_matrices(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """(count, dim, dim) matrices with entries uniform on the closed unit disk."""
    _check_dim(dim)
    radius = np.sqrt(rng.uniform(0.0, 1.0, (count, dim, dim)))
    angle = rng.uniform(-np.pi, np.pi, (count, dim, dim))
    return radius * np.exp(1j * angle)


def complement_vectors(rng: np.random.Generator, states: np.ndarray) -> np.ndarray:
    """
    (count, dim - 1, dim) complement bases of unit vectors `states`, one per row.

    Each state is the first column of a QR factorisation; with the phases of
    diag(R) divided out that column is the state itself and the remaining
    columns span its orthogonal complement.
    """
    count, dim = states.shape
    columns = np.concatenate([states[..., None], _ginibre(rng, count, dim, dim - 1)], axis=-1)
    return np.swapaxes(_phase_fixed_q(columns)[..., 1:], -1, -2)
