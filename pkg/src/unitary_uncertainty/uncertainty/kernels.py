"""
Array kernels behind the equalities, vectorised over leading batch axes.

Every argument ending in ``_psi`` is an image ``A|psi>`` of shape (..., d).
Complement vectors come as rows, shape (..., k, d). Spreads and sign factors
broadcast against the batch shape. The scalar functions in ``equalities`` and
``limit.hermitian`` call these with no batch axes.
"""

from __future__ import annotations

from typing import Tuple, Union

import numpy as np

Factor = Union[float, np.ndarray]


def inner(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """<x|y> over the last axis."""
    return np.einsum("...d,...d->...", x.conj(), y)


def apply_batch(ops: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """A_n |psi_n> for stacks of matrices (n, d, d) and vectors (n, d)."""
    return np.einsum("...ij,...j->...i", ops, psi)


def variance_values(psi: np.ndarray, a_psi: np.ndarray) -> np.ndarray:
    """Raw <A^dag A> - |<A>|^2; callers clamp roundoff."""
    return inner(a_psi, a_psi).real - np.abs(inner(psi, a_psi)) ** 2


def unitary_variance_values(psi: np.ndarray, u_psi: np.ndarray) -> np.ndarray:
    """Raw 1 - |<U>|^2 for unitary U."""
    return 1.0 - np.abs(inner(psi, u_psi)) ** 2


def covariance_values(psi: np.ndarray, a_psi: np.ndarray, b_psi: np.ndarray) -> np.ndarray:
    return inner(a_psi, b_psi) - inner(psi, a_psi).conj() * inner(psi, b_psi)


def overlap_terms(vectors: np.ndarray, f: np.ndarray) -> np.ndarray:
    """|<b_k|f>|^2 for each row b_k of vectors."""
    return np.abs(np.einsum("...kd,...d->...k", vectors.conj(), f)) ** 2


def _column(x: Factor) -> np.ndarray:
    return np.asarray(x)[..., None]


def sum_rhs_values(psi: np.ndarray, a_psi: np.ndarray, b_psi: np.ndarray, vectors: np.ndarray, factor: Factor) -> np.ndarray:
    f = a_psi - 1j * _column(factor) * b_psi
    im_cov = covariance_values(psi, a_psi, b_psi).imag
    return overlap_terms(vectors, f).sum(axis=-1) - 2.0 * np.asarray(factor) * im_cov


def product_rhs_values(
    psi: np.ndarray,
    a_psi: np.ndarray,
    b_psi: np.ndarray,
    vectors: np.ndarray,
    factor: Factor,
    d_a: Factor,
    d_b: Factor,
) -> np.ndarray:
    h = _column(d_b) * a_psi - 1j * _column(factor) * _column(d_a) * b_psi
    im_cov = covariance_values(psi, a_psi, b_psi).imag
    d_a, d_b = np.asarray(d_a), np.asarray(d_b)
    return overlap_terms(vectors, h).sum(axis=-1) / (2.0 * d_a * d_b) - np.asarray(factor) * im_cov


def commutator_values(u_psi: np.ndarray, v_psi: np.ndarray) -> np.ndarray:
    """Im<[u, v]> = 2 Im<u psi|v psi> for Hermitian u, v."""
    return 2.0 * inner(u_psi, v_psi).imag


def hermitian_sum_values(u_psi: np.ndarray, v_psi: np.ndarray, vectors: np.ndarray, factor: Factor) -> np.ndarray:
    f = u_psi - 1j * _column(factor) * v_psi
    return overlap_terms(vectors, f).sum(axis=-1) - np.asarray(factor) * commutator_values(u_psi, v_psi)


def hermitian_quotient_parts(
    u_psi: np.ndarray,
    v_psi: np.ndarray,
    vectors: np.ndarray,
    factor: Factor,
    d_u: Factor,
    d_v: Factor,
) -> Tuple[np.ndarray, np.ndarray]:
    """(numerator, denominator) of the quotient form of du dv."""
    f = u_psi / _column(d_u) - 1j * _column(factor) * v_psi / _column(d_v)
    numerator = -0.5 * np.asarray(factor) * commutator_values(u_psi, v_psi)
    denominator = 1.0 - 0.5 * overlap_terms(vectors, f).sum(axis=-1)
    return numerator, denominator
