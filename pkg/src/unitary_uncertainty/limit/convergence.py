from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from unitary_uncertainty.core.errors import BranchCutError, InvalidStateError
from unitary_uncertainty.core.models import ConvergenceRecord, ConvergenceStudy
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.limit.hermitian import commutator_expectation, hermitian_pair_from_dft
from unitary_uncertainty.linalg.sampling import random_complement
from unitary_uncertainty.linalg.types import PureState
from unitary_uncertainty.operators.dft import dft_pair
from unitary_uncertainty.uncertainty.kernels import overlap_terms
from unitary_uncertainty.uncertainty.variance import covariance, general_variance, unitary_variance
from unitary_uncertainty.utils.logging import get_logger

log = get_logger("unitary_uncertainty.limit")

StateFamily = Callable[[int], PureState]

QUANTITIES = ("variance_u", "variance_v", "im_cov", "perp_sum")


def localized_state(
    dim: int,
    *,
    centre: int = 0,
    width: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> PureState:
    """
    Discrete Gaussian in cyclic index distance around `centre`.

    |psi_k|^2 has standard deviation `width` (default d^(1/4)). Index 0 is
    the zero eigenphase of the clock; the index d/2 region is where the
    principal logarithm jumps, so the default profile stays away from it.
    """
    if not 0 <= centre < dim:
        raise InvalidStateError(f"centre must lie in [0, {dim}), got {centre}")
    w = dim**0.25 if width is None else float(width)
    if w <= 0.0:
        raise InvalidStateError(f"width must be positive, got {w!r}")
    offset = np.abs(np.arange(dim) - centre)
    distance = np.minimum(offset, dim - offset)
    return PureState.from_vector(np.exp(-(distance**2) / (4.0 * w * w)), tol=tol)


def relative_error(unitary_value: float, hermitian_value: float, floor: float) -> float:
    return abs(unitary_value - hermitian_value) / max(abs(unitary_value), floor)


def _records_for_dim(dim: int, family: StateFamily, seed: int, tol: Tolerances) -> List[ConvergenceRecord]:
    pair = dft_pair(dim, tol=tol)
    herm = hermitian_pair_from_dft(pair, tol=tol)
    psi = family(dim)
    u, v = pair.clock, pair.shift
    step = 2.0 * math.pi / dim

    basis = random_complement(psi, (seed, dim), tol=tol)
    # lower sign: the upper-sign sum of the Gaussian family cancels to leading order
    f_unitary = u.apply(psi) + 1j * v.apply(psi)
    f_hermitian = herm.u.apply(psi) + 1j * herm.v.apply(psi)
    comm = commutator_expectation(herm.u, herm.v, psi, tol=tol)

    pairs = {
        "variance_u": (unitary_variance(u, psi, tol=tol).value, step * general_variance(herm.u, psi, tol=tol).value),
        "variance_v": (unitary_variance(v, psi, tol=tol).value, step * general_variance(herm.v, psi, tol=tol).value),
        "im_cov": (covariance(u, v, psi, tol=tol).imag, (math.pi / dim) * comm.imag),
        "perp_sum": (
            math.fsum(overlap_terms(basis.vectors, f_unitary).tolist()),
            step * math.fsum(overlap_terms(basis.vectors, f_hermitian).tolist()),
        ),
    }
    return [
        ConvergenceRecord(
            dim=dim,
            quantity=name,
            lhs_unitary=a,
            lhs_scaled_hermitian=b,
            relative_error=relative_error(a, b, tol.relative_floor),
        )
        for name, (a, b) in pairs.items()
    ]


def convergence_study(
    d_values: Sequence[int],
    state_family: Optional[StateFamily] = None,
    *,
    seed: int = 0,
    workers: int = 1,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> ConvergenceStudy:
    """
    Compare unitary quantities with their (2pi/d)-scaled Hermitian counterparts.

    Dimensions whose clock or shift has an eigenphase on the branch cut (every
    even d) are skipped with a warning. Records come out in input order of
    d_values whatever the worker count.
    """
    if not d_values:
        raise ValueError("d_values must not be empty")
    family: StateFamily = state_family or (lambda dim: localized_state(dim, tol=tol))

    def run_one(dim: int) -> Optional[List[ConvergenceRecord]]:
        try:
            return _records_for_dim(dim, family, seed, tol)
        except BranchCutError as e:
            log.warning("Skipping d=%d: %s", dim, e)
            return None

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(run_one, d_values))

    study = ConvergenceStudy(seed=seed)
    for dim, records in zip(d_values, results):
        if records is None:
            study.skipped_dims.append(dim)
        else:
            study.records.extend(records)
    if not study.records:
        raise BranchCutError(f"every requested dimension hit the branch cut: {list(d_values)}")
    log.info("Convergence study finished: %d dims, %d skipped", len(d_values), len(study.skipped_dims))
    return study


@dataclass(frozen=True)
class DecaySummary:
    quantity: str
    dims: List[int]
    first_error: float
    last_error: float
    monotone: bool

    def format(self) -> str:
        trend = "monotone decay" if self.monotone else "non-monotone"
        return (
            f"{self.quantity}: d={self.dims[0]}..{self.dims[-1]} "
            f"error {self.first_error:.3e} -> {self.last_error:.3e} ({trend})"
        )


def decay_summary(study: ConvergenceStudy) -> List[DecaySummary]:
    """Per-quantity first/last relative error and whether the errors never increase with d."""
    out: List[DecaySummary] = []
    for quantity in study.quantities():
        series = study.series(quantity)
        errors = [r.relative_error for r in series]
        monotone = all(later <= earlier for earlier, later in zip(errors, errors[1:]))
        out.append(
            DecaySummary(
                quantity=quantity,
                dims=[r.dim for r in series],
                first_error=errors[0],
                last_error=errors[-1],
                monotone=monotone,
            )
        )
    return out
