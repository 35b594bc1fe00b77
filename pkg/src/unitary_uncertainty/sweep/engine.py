from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Tuple

import numpy as np

from unitary_uncertainty.core.models import (
    BoundName,
    DftPair,
    SignChoice,
    SweepJob,
    SweepReport,
    SweepRow,
    SweepTable,
    UncertaintyReport,
)
from unitary_uncertainty.operators.dft import dft_pair
from unitary_uncertainty.operators.examples import canonical_complement, example_state
from unitary_uncertainty.sinks.base import Sink
from unitary_uncertainty.sweep.validators import Validator
from unitary_uncertainty.uncertainty.hierarchy import check_order
from unitary_uncertainty.uncertainty.report import full_report, nonzero_term_count
from unitary_uncertainty.uncertainty.variance import visibility
from unitary_uncertainty.utils.logging import get_logger


def theta_grid(steps: int) -> np.ndarray:
    """Uniform grid over [0, pi/2], both endpoints included."""
    if steps < 2:
        raise ValueError(f"theta_steps must be >= 2, got {steps}")
    return np.linspace(0.0, math.pi / 2, steps)


def _squared(value: Optional[float]) -> Optional[float]:
    """Product bounds are compared as squares; negative bounds are vacuous and clip to 0."""
    if value is None:
        return None
    return max(value, 0.0) ** 2


class SweepEngine:
    """
    Evaluates the full bound report on every point of the theta grid for the
    DFT pair, the cos/sin example state and its canonical complement.
    """

    def __init__(self, validator: Validator, sink: Optional[Sink] = None):
        self.validator = validator
        self.sink = sink
        self.log = get_logger("unitary_uncertainty.sweep")

    def run(self, job: SweepJob) -> Tuple[SweepTable, SweepReport]:
        for n in job.n_values:
            check_order(n, job.dim - 1)
        thetas = theta_grid(job.theta_steps)
        pair = dft_pair(job.dim, tol=job.tol)
        report = SweepReport()
        table = SweepTable(dim=job.dim, n_values=list(job.n_values), sign_policy=job.sign_policy.value)

        self.log.info(
            "Sweep started: dim=%d steps=%d n=%s sign=%s workers=%d",
            job.dim,
            job.theta_steps,
            list(job.n_values),
            job.sign_policy.value,
            job.workers,
        )

        with ThreadPoolExecutor(max_workers=max(1, job.workers)) as pool:
            rows = list(pool.map(lambda theta: self.evaluate_row(pair, float(theta), job), thetas))

        for row in rows:
            report.rows_evaluated += 1
            result = self.validator.validate(row, job.tol)
            if not result.ok:
                report.rows_invalid += 1
                report.bump_failure(result.reason)
                self.log.warning("Invalid row at theta=%.17g: %s", row.theta, result.reason)
                continue
            table.rows.append(row)
            report.rows_emitted += 1

        if self.sink is not None and job.output_path:
            self.sink.write(table, job.output_path)

        self.log.info(
            "Sweep done: evaluated=%d emitted=%d invalid=%d",
            report.rows_evaluated,
            report.rows_emitted,
            report.rows_invalid,
        )
        return table, report

    def evaluate_row(self, pair: DftPair, theta: float, job: SweepJob) -> SweepRow:
        psi = example_state(job.dim, theta, tol=job.tol)
        basis = canonical_complement(job.dim, theta, tol=job.tol)
        u, v = pair.clock, pair.shift
        rep = full_report(u, v, psi, basis, job.n_values, sign_policy=job.sign_policy, tol=job.tol)

        return SweepRow(
            theta=theta,
            lhs_sum=rep.lhs_sum,
            lhs_prod=rep.lhs_prod,
            rhs_uues=self._required(rep, BoundName.UUES_RHS, sign=SignChoice.PLUS),
            rhs_uuep_sq=_squared(rep.value_of(BoundName.UUEP_RHS, sign=SignChoice.PLUS)),
            lb_msuur=rep.value_of(BoundName.MSUUR_SUM),
            msuur_residual=None if rep.msuur is None else rep.msuur.residual,
            lb_bpuur1=self._required(rep, BoundName.BPUUR1),
            lb_bpuur2=self._required(rep, BoundName.BPUUR2),
            lb_buur=self._required(rep, BoundName.BUUR),
            lb_uurs={n: self._required(rep, BoundName.UURS_N, order=n) for n in job.n_values},
            lb_uurp={n: _squared(rep.value_of(BoundName.UURP_N, order=n)) for n in job.n_values},
            visibility_u=visibility(u, psi, tol=job.tol),
            visibility_v=visibility(v, psi, tol=job.tol),
            nonzero_term_count=nonzero_term_count(u, v, psi, basis, tol=job.tol),
        )

    def _required(
        self,
        rep: UncertaintyReport,
        name: BoundName,
        order: Optional[int] = None,
        sign: Optional[SignChoice] = None,
    ) -> float:
        value = rep.value_of(name, order, sign)
        if value is None:
            raise LookupError(f"report is missing {name.value}")
        return value