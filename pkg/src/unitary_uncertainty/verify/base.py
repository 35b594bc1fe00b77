from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Protocol, Tuple

import numpy as np

from unitary_uncertainty.core.tolerances import Tolerances


@dataclass(frozen=True)
class TrialContext:
    """Everything one trial of a property check needs; `seed` is unique per (run seed, check, dim, trial)."""

    check_name: str
    dim: int
    trial: int
    seed: Tuple[int, ...]
    tol: Tolerances

    def subseed(self, k: int) -> Tuple[int, ...]:
        return (*self.seed, k)


@dataclass(frozen=True)
class BatchContext:
    """All trials of one check at one dimension; `seed` is unique per (run seed, check, dim)."""

    check_name: str
    dim: int
    trials: int
    seed: Tuple[int, ...]
    tol: Tolerances

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


@dataclass(frozen=True)
class TrialOutcome:
    passed: bool
    residual: float = 0.0
    skipped: bool = False
    detail: str = ""

    @classmethod
    def skip(cls, detail: str) -> "TrialOutcome":
        return cls(passed=True, skipped=True, detail=detail)

    @classmethod
    def within(cls, residual: float, threshold: float) -> "TrialOutcome":
        return cls(passed=residual <= threshold, residual=residual)


@dataclass
class CheckMetrics:
    """Per-check tallies collected by the runner."""

    trials: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    worst_residual: float = 0.0
    latency_ms: float = 0.0

    def record(self, outcome: TrialOutcome) -> None:
        self.trials += 1
        if outcome.skipped:
            self.skipped += 1
            return
        if outcome.passed:
            self.passed += 1
        else:
            self.failed += 1
        self.worst_residual = max(self.worst_residual, outcome.residual)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "worst_residual": self.worst_residual,
            "latency_ms": round(self.latency_ms, 3),
        }


class PropertyCheck(Protocol):
    """Strategy contract implemented by each property check."""

    name: str
    min_dim: int

    def run_trial(self, ctx: TrialContext) -> TrialOutcome: ...


class BatchPropertyCheck(Protocol):
    """Checks that draw every trial of a dimension at once and return one outcome per trial, in order."""

    name: str
    min_dim: int

    def run_batch(self, ctx: BatchContext) -> List[TrialOutcome]: ...
