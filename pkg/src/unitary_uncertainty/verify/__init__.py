from unitary_uncertainty.verify.base import (
    BatchContext,
    BatchPropertyCheck,
    CheckMetrics,
    PropertyCheck,
    TrialContext,
    TrialOutcome,
)
from unitary_uncertainty.verify.registry import CheckRegistry, create_default_registry
from unitary_uncertainty.verify.runner import VerificationResult, VerificationRunner

__all__ = [
    "BatchContext",
    "BatchPropertyCheck",
    "CheckMetrics",
    "CheckRegistry",
    "PropertyCheck",
    "TrialContext",
    "TrialOutcome",
    "VerificationResult",
    "VerificationRunner",
    "create_default_registry",
]
