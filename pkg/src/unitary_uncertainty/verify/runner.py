from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import chain
from typing import Dict, Iterable, List, Union

from unitary_uncertainty.core.errors import UncertaintyError
from unitary_uncertainty.core.models import VerifyJob
from unitary_uncertainty.utils.logging import get_logger
from unitary_uncertainty.verify.base import (
    BatchContext,
    BatchPropertyCheck,
    CheckMetrics,
    PropertyCheck,
    TrialContext,
    TrialOutcome,
)
from unitary_uncertainty.verify.registry import CheckRegistry

AnyCheck = Union[PropertyCheck, BatchPropertyCheck]


@dataclass
class VerificationResult:
    """Outcome of a verification run, one CheckMetrics per check in registry order."""

    job: VerifyJob
    metrics: Dict[str, CheckMetrics] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(m.failed == 0 for m in self.metrics.values())

    def summary_lines(self) -> List[str]:
        """Deterministic text summary; latencies are left out so reruns print identical bytes."""
        width = max((len(name) for name in self.metrics), default=0)
        lines = [f"verify: dims={list(self.job.dims)} trials={self.job.trials} seed={self.job.seed}"]
        for name, m in self.metrics.items():
            lines.append(
                f"{name:<{width}}  trials={m.trials} passed={m.passed} failed={m.failed} "
                f"skipped={m.skipped} worst_residual={m.worst_residual:.3e}"
            )
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return lines


class VerificationRunner:
    """Runs every selected property check over dims x trials; batch checks draw one seeded generator per dim."""

    def __init__(self, registry: CheckRegistry):
        self.registry = registry
        self.log = get_logger("unitary_uncertainty.verify.runner")

    def run(self, job: VerifyJob) -> VerificationResult:
        if job.trials < 1:
            raise ValueError(f"trials must be >= 1, got {job.trials}")
        names = list(job.checks) if job.checks else list(self.registry.keys())
        result = VerificationResult(job=job)

        self.log.info(
            "Verification started: checks=%d dims=%s trials=%d seed=%d",
            len(names),
            list(job.dims),
            job.trials,
            job.seed,
        )
        with ThreadPoolExecutor(max_workers=max(1, job.workers)) as pool:
            for index, name in enumerate(names):
                check = self.registry.create(name)
                result.metrics[name] = self._run_check(pool, check, index, job)

        self.log.info("Verification done: ok=%s", result.ok)
        return result

    def _run_check(self, pool: ThreadPoolExecutor, check: AnyCheck, index: int, job: VerifyJob) -> CheckMetrics:
        started = time.perf_counter()
        metrics = CheckMetrics()
        dims = [dim for dim in job.dims if dim >= check.min_dim]
        outcomes: Iterable[TrialOutcome]
        if hasattr(check, "run_batch"):
            batches = [
                BatchContext(check_name=check.name, dim=dim, trials=job.trials, seed=(job.seed, index, dim), tol=job.tol)
                for dim in dims
            ]
            outcomes = chain.from_iterable(pool.map(lambda ctx: self._run_batch(check, ctx), batches))
        else:
            contexts = [
                TrialContext(
                    check_name=check.name,
                    dim=dim,
                    trial=trial,
                    seed=(job.seed, index, dim, trial),
                    tol=job.tol,
                )
                for dim in dims
                for trial in range(job.trials)
            ]
            outcomes = pool.map(lambda ctx: self._run_trial(check, ctx), contexts)
        for outcome in outcomes:
            metrics.record(outcome)
        metrics.latency_ms = (time.perf_counter() - started) * 1000.0
        self.log.debug("Check %s: %s", check.name, metrics.as_dict())
        return metrics

    def _run_trial(self, check: PropertyCheck, ctx: TrialContext) -> TrialOutcome:
        try:
            return check.run_trial(ctx)
        except (UncertaintyError, ArithmeticError) as exc:
            self.log.warning("Check %s failed at dim=%d trial=%d: %s", check.name, ctx.dim, ctx.trial, exc)
            return TrialOutcome(passed=False, residual=float("inf"), detail=type(exc).__name__)

    def _run_batch(self, check: BatchPropertyCheck, ctx: BatchContext) -> List[TrialOutcome]:
        try:
            outcomes = check.run_batch(ctx)
        except (UncertaintyError, ArithmeticError) as exc:
            self.log.warning("Check %s failed at dim=%d (batch of %d): %s", check.name, ctx.dim, ctx.trials, exc)
            return [TrialOutcome(passed=False, residual=float("inf"), detail=type(exc).__name__)] * ctx.trials
        if len(outcomes) != ctx.trials:
            raise ValueError(f"check {check.name} returned {len(outcomes)} outcomes for {ctx.trials} trials")
        return outcomes
