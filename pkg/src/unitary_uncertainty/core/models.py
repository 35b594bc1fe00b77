from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from unitary_uncertainty.core.errors import InvalidOperatorError, NumericalInvariantError
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances
from unitary_uncertainty.linalg.types import Operator, OperatorKind


class SignChoice(str, Enum):
    """Paired upper/lower sign of the equalities: PLUS is the upper sign throughout."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def factor(self) -> int:
        return 1 if self is SignChoice.PLUS else -1


class SignPolicy(str, Enum):
    BEST = "best"
    PLUS = "plus"
    MINUS = "minus"

    def fixed_sign(self) -> Optional[SignChoice]:
        if self is SignPolicy.BEST:
            return None
        return SignChoice(self.value)


class BoundName(str, Enum):
    MSUUR_SUM = "MSUUR_SUM"
    BPUUR1 = "BPUUR1"
    BPUUR2 = "BPUUR2"
    BUUR = "BUUR"
    UURS_N = "UURS_n"
    UURP_N = "UURP_n"
    UUES_RHS = "UUES_RHS"
    UUEP_RHS = "UUEP_RHS"


@dataclass(frozen=True)
class VarianceValue:
    """Nonnegative variance; tiny negative roundoff is clamped at construction by the callers."""

    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or self.value < 0.0:
            raise NumericalInvariantError(f"variance must be finite and nonnegative, got {self.value!r}")

    @property
    def std(self) -> float:
        return math.sqrt(self.value)

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class CovarianceValue:
    value: complex

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def __abs__(self) -> float:
        return abs(self.value)

    def __complex__(self) -> complex:
        return self.value


@dataclass(frozen=True)
class BoundValue:
    """Right-hand side of one relation or equality for one instance."""

    name: BoundName
    value: float
    sign_used: Optional[SignChoice] = None
    subset_used: Optional[Tuple[int, ...]] = None
    order: Optional[int] = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise NumericalInvariantError(f"{self.name.value} bound is not finite: {self.value!r}")

    @property
    def label(self) -> str:
        if self.order is None:
            return self.name.value
        return self.name.value.replace("_n", str(self.order))


@dataclass(frozen=True)
class MsuurCheck:
    """
    Massar-Spindel relation evaluated for one instance.

    `value` is (1+2K) x y + K^2 (x + y) - K^2 for finite K; `residual` is
    value / K^2 (its K -> infinity limit x + y - 1 when K is infinite, and
    x y when K = 0).
    """

    k: float
    value: Optional[float]
    residual: float
    holds: bool


@dataclass(frozen=True)
class UncertaintyReport:
    dU2: VarianceValue
    dV2: VarianceValue
    cov: CovarianceValue
    bounds: Tuple[BoundValue, ...] = ()
    msuur: Optional[MsuurCheck] = None
    commutation_phase: Optional[float] = None

    @property
    def lhs_sum(self) -> float:
        return self.dU2.value + self.dV2.value

    @property
    def lhs_prod(self) -> float:
        return self.dU2.value * self.dV2.value

    def find(
        self,
        name: BoundName,
        order: Optional[int] = None,
        sign: Optional[SignChoice] = None,
    ) -> Optional[BoundValue]:
        """First bound matching name/order/sign, or None when absent."""
        for b in self.bounds:
            if b.name is not name:
                continue
            if order is not None and b.order != order:
                continue
            if sign is not None and b.sign_used is not sign:
                continue
            return b
        return None

    def value_of(self, name: BoundName, order: Optional[int] = None, sign: Optional[SignChoice] = None) -> Optional[float]:
        b = self.find(name, order, sign)
        return None if b is None else b.value


@dataclass(frozen=True, eq=False)
class DftPair:
    """Clock (diagonal phases) and shift (cyclic permutation) with clock.shift = omega shift.clock."""

    clock: Operator
    shift: Operator
    omega: complex
    tol: Tolerances = field(default=DEFAULT_TOLERANCES, repr=False)

    def __post_init__(self) -> None:
        if self.clock.dim != self.shift.dim:
            raise InvalidOperatorError("clock and shift dimensions differ")
        u, v = self.clock.entries, self.shift.entries
        residual = float(np.max(np.abs(u @ v - self.omega * (v @ u))))
        if residual > self.tol.unitary_tol:
            raise InvalidOperatorError(f"clock/shift violate UV = omega VU (residual {residual:.3e})")

    @property
    def dim(self) -> int:
        return self.clock.dim


@dataclass(frozen=True, eq=False)
class HermitianPair:
    u: Operator
    v: Operator
    scale: float
    source: Optional[DftPair] = None

    def __post_init__(self) -> None:
        for name, op in (("u", self.u), ("v", self.v)):
            if op.kind is not OperatorKind.HERMITIAN:
                raise InvalidOperatorError(f"{name} must be tagged Hermitian, got {op.kind.value}")


@dataclass(frozen=True)
class ConvergenceRecord:
    """Relative gap between a unitary quantity and its (2pi/d)-scaled Hermitian counterpart."""

    dim: int
    quantity: str
    lhs_unitary: float
    lhs_scaled_hermitian: float
    relative_error: float


CONVERGENCE_COLUMNS = ["dim", "quantity", "lhs_unitary", "lhs_scaled_hermitian", "relative_error"]


@dataclass
class ConvergenceStudy:
    records: List[ConvergenceRecord] = field(default_factory=list)
    skipped_dims: List[int] = field(default_factory=list)
    seed: int = 0

    def columns(self) -> List[str]:
        return list(CONVERGENCE_COLUMNS)

    def records_as_dicts(self) -> List[Dict[str, Any]]:
        return [
            {
                "dim": r.dim,
                "quantity": r.quantity,
                "lhs_unitary": r.lhs_unitary,
                "lhs_scaled_hermitian": r.lhs_scaled_hermitian,
                "relative_error": r.relative_error,
            }
            for r in self.records
        ]

    def metadata(self) -> Dict[str, Any]:
        return {"kind": "convergence", "seed": self.seed, "skipped_dims": list(self.skipped_dims)}

    def quantities(self) -> List[str]:
        seen: List[str] = []
        for r in self.records:
            if r.quantity not in seen:
                seen.append(r.quantity)
        return seen

    def series(self, quantity: str) -> List[ConvergenceRecord]:
        return sorted((r for r in self.records if r.quantity == quantity), key=lambda r: r.dim)


@dataclass(frozen=True)
class SweepRow:
    """One theta grid point of a figure sweep; None marks a bound undefined at this point."""

    theta: float
    lhs_sum: float
    lhs_prod: float
    rhs_uues: float
    rhs_uuep_sq: Optional[float]
    lb_msuur: Optional[float]
    msuur_residual: Optional[float]
    lb_bpuur1: float
    lb_bpuur2: float
    lb_buur: float
    lb_uurs: Dict[int, float]
    lb_uurp: Dict[int, Optional[float]]
    visibility_u: float
    visibility_v: float
    nonzero_term_count: int

    def as_dict(self, n_values: List[int]) -> Dict[str, Any]:
        row: Dict[str, Any] = {
            "theta": self.theta,
            "lhs_sum": self.lhs_sum,
            "lhs_prod": self.lhs_prod,
            "rhs_uues": self.rhs_uues,
            "rhs_uuep_sq": self.rhs_uuep_sq,
            "lb_msuur": self.lb_msuur,
            "msuur_residual": self.msuur_residual,
            "lb_bpuur1": self.lb_bpuur1,
            "lb_bpuur2": self.lb_bpuur2,
            "lb_buur": self.lb_buur,
        }
        for n in n_values:
            row[f"lb_uurs_{n}"] = self.lb_uurs[n]
        for n in n_values:
            row[f"lb_uurp_{n}"] = self.lb_uurp[n]
        row["visibility_u"] = self.visibility_u
        row["visibility_v"] = self.visibility_v
        row["nonzero_term_count"] = self.nonzero_term_count
        return row

    @classmethod
    def from_dict(cls, data: Dict[str, Any], n_values: List[int]) -> "SweepRow":
        return cls(
            theta=float(data["theta"]),
            lhs_sum=float(data["lhs_sum"]),
            lhs_prod=float(data["lhs_prod"]),
            rhs_uues=float(data["rhs_uues"]),
            rhs_uuep_sq=_opt_float(data["rhs_uuep_sq"]),
            lb_msuur=_opt_float(data["lb_msuur"]),
            msuur_residual=_opt_float(data["msuur_residual"]),
            lb_bpuur1=float(data["lb_bpuur1"]),
            lb_bpuur2=float(data["lb_bpuur2"]),
            lb_buur=float(data["lb_buur"]),
            lb_uurs={n: float(data[f"lb_uurs_{n}"]) for n in n_values},
            lb_uurp={n: _opt_float(data[f"lb_uurp_{n}"]) for n in n_values},
            visibility_u=float(data["visibility_u"]),
            visibility_v=float(data["visibility_v"]),
            nonzero_term_count=int(data["nonzero_term_count"]),
        )


def _opt_float(value: Any) -> Optional[float]:
    if value is None or value == "":
        return None
    return float(value)


@dataclass
class SweepTable:
    dim: int
    n_values: List[int]
    sign_policy: str
    rows: List[SweepRow] = field(default_factory=list)

    def columns(self) -> List[str]:
        cols = [
            "theta",
            "lhs_sum",
            "lhs_prod",
            "rhs_uues",
            "rhs_uuep_sq",
            "lb_msuur",
            "msuur_residual",
            "lb_bpuur1",
            "lb_bpuur2",
            "lb_buur",
        ]
        cols += [f"lb_uurs_{n}" for n in self.n_values]
        cols += [f"lb_uurp_{n}" for n in self.n_values]
        cols += ["visibility_u", "visibility_v", "nonzero_term_count"]
        return cols

    def records_as_dicts(self) -> List[Dict[str, Any]]:
        return [row.as_dict(self.n_values) for row in self.rows]

    def metadata(self) -> Dict[str, Any]:
        return {"kind": "sweep", "dim": self.dim, "n_values": list(self.n_values), "sign_policy": self.sign_policy}

    @classmethod
    def from_records(cls, metadata: Dict[str, Any], records: List[Dict[str, Any]]) -> "SweepTable":
        n_values = [int(n) for n in metadata["n_values"]]
        return cls(
            dim=int(metadata["dim"]),
            n_values=n_values,
            sign_policy=str(metadata["sign_policy"]),
            rows=[SweepRow.from_dict(r, n_values) for r in records],
        )


@dataclass(frozen=True)
class ValidationResult:
    """Result of row validation."""

    ok: bool
    reason: str = ""


@dataclass
class SweepReport:
    """Summary report of a sweep run."""

    rows_evaluated: int = 0
    rows_emitted: int = 0
    rows_invalid: int = 0
    failures: Dict[str, int] = field(default_factory=dict)

    def bump_failure(self, key: str) -> None:
        """Increment the count for a specific failure type."""
        self.failures[key] = self.failures.get(key, 0) + 1

    @property
    def ok(self) -> bool:
        return self.rows_invalid == 0


@dataclass(frozen=True)
class SweepJob:
    """Resolved parameters of one figure sweep."""

    dim: int
    n_values: Tuple[int, ...]
    theta_steps: int = 201
    sign_policy: SignPolicy = SignPolicy.BEST
    output_path: Optional[str] = None
    fmt: str = "csv"
    workers: int = 1
    tol: Tolerances = DEFAULT_TOLERANCES


@dataclass(frozen=True)
class LimitJob:
    d_values: Tuple[int, ...]
    seed: int = 0
    output_path: Optional[str] = None
    fmt: str = "csv"
    workers: int = 1
    tol: Tolerances = DEFAULT_TOLERANCES


@dataclass(frozen=True)
class VerifyJob:
    dims: Tuple[int, ...]
    trials: int
    seed: int = 0
    checks: Optional[Tuple[str, ...]] = None
    workers: int = 1
    tol: Tolerances = DEFAULT_TOLERANCES
