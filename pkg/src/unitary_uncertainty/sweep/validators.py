from __future__ import annotations

from typing import Protocol

from unitary_uncertainty.core.models import SweepRow, ValidationResult
from unitary_uncertainty.core.tolerances import Tolerances


class Validator(Protocol):
    """Protocol for sweep row validators."""

    def validate(self, row: SweepRow, tol: Tolerances) -> ValidationResult: ...


class EqualityColumnsValidator:
    """Rows must reproduce both equalities: rhs_uues == lhs_sum and, where defined, rhs_uuep_sq == lhs_prod."""

    def validate(self, row: SweepRow, tol: Tolerances) -> ValidationResult:
        if abs(row.rhs_uues - row.lhs_sum) > tol.eq_tol:
            return ValidationResult(False, "sum_equality")
        if row.rhs_uuep_sq is not None and abs(row.rhs_uuep_sq - row.lhs_prod) > tol.eq_tol:
            return ValidationResult(False, "product_equality")
        return ValidationResult(True, "")
