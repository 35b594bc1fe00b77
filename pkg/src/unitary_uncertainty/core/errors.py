"""Exception hierarchy for precondition and numerical failures."""

from __future__ import annotations


class UncertaintyError(ValueError):
    """Base class for invalid inputs to toolkit operations."""


class DimensionMismatchError(UncertaintyError):
    pass


class InvalidStateError(UncertaintyError):
    pass


class InvalidOperatorError(UncertaintyError):
    pass


class AnchorMismatchError(UncertaintyError):
    """Complement basis does not span the orthogonal complement of the given state."""


class PerpendicularStateError(UncertaintyError):
    pass


class BranchCutError(UncertaintyError):
    """An eigenphase sits on the branch cut of the principal logarithm."""


class LogRoundTripError(UncertaintyError):
    pass


class DegenerateVarianceError(UncertaintyError):
    """Product-form quantities are undefined when one of the standard deviations vanishes."""


class DegenerateDenominatorError(UncertaintyError):
    """The quotient form of the Hermitian product equality has a vanishing denominator."""


class CommutationError(UncertaintyError):
    """The operator pair does not satisfy UV = e^{i phi} VU for a scalar phase."""


class SubsetSizeError(UncertaintyError):
    pass


class NumericalInvariantError(ArithmeticError):
    """A quantity that must be real (or nonnegative) drifted beyond tolerance."""
