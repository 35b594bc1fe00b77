from __future__ import annotations

from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by every operation of the toolkit."""

    norm_tol: float = 1e-12
    orth_tol: float = 1e-10
    unitary_tol: float = 1e-10
    log_tol: float = 1e-8
    branch_tol: float = 1e-9
    eq_tol: float = 1e-10
    quotient_tol: float = 1e-8
    degenerate_tol: float = 1e-12
    zero_amplitude: float = 1e-14
    relative_floor: float = 1e-15

    def with_overrides(self, **overrides: float) -> "Tolerances":
        """Return a copy with selected tolerances replaced."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise KeyError(f"Unknown tolerance(s): {sorted(unknown)}. Known: {sorted(known)}")
        return replace(self, **overrides)


DEFAULT_TOLERANCES = Tolerances()
