from __future__ import annotations

from dataclasses import dataclass

from unitary_uncertainty.core.models import SweepJob
from unitary_uncertainty.sinks.base import Sink
from unitary_uncertainty.sinks.registry import create_sink
from unitary_uncertainty.sweep.engine import SweepEngine
from unitary_uncertainty.sweep.validators import EqualityColumnsValidator, Validator
from unitary_uncertainty.verify.registry import create_default_registry
from unitary_uncertainty.verify.runner import VerificationRunner


@dataclass(frozen=True)
class BuiltSweep:
    engine: SweepEngine
    sink: Sink
    validator: Validator


class ComponentFactory:
    """
    Factory responsible for wiring dependencies.
    Keeps main.py clean and makes new sinks or checks easy to plug in.
    """

    def build_sweep(self, job: SweepJob) -> BuiltSweep:
        sink = self.sink(job.fmt)
        validator = self._validator()
        return BuiltSweep(engine=SweepEngine(validator=validator, sink=sink), sink=sink, validator=validator)

    def build_verifier(self) -> VerificationRunner:
        """Create the verification runner with the built-in checks."""
        return VerificationRunner(registry=create_default_registry())

    def sink(self, fmt: str) -> Sink:
        return create_sink(fmt)

    def _validator(self) -> Validator:
        return EqualityColumnsValidator()
