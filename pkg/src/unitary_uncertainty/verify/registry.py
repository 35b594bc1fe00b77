from __future__ import annotations

from typing import Callable, Dict, Iterable

from unitary_uncertainty.verify.base import PropertyCheck
from unitary_uncertainty.verify.checks import built_in_check_factories


class CheckRegistry:
    """Registry mapping check names to check factories, kept in registration order."""

    def __init__(self):
        self._factories: Dict[str, Callable[[], PropertyCheck]] = {}

    def register(self, name: str, factory: Callable[[], PropertyCheck]) -> None:
        key = str(name or "").strip()
        if not key:
            raise ValueError("Property check name cannot be empty")
        self._factories[key] = factory

    def create(self, name: str) -> PropertyCheck:
        key = str(name or "").strip()
        if key not in self._factories:
            known = ", ".join(sorted(self._factories.keys()))
            raise KeyError(f"Unknown property check '{key}'. Known checks: {known}")
        return self._factories[key]()

    def keys(self) -> Iterable[str]:
        return self._factories.keys()


def create_default_registry() -> CheckRegistry:
    """Create a registry preloaded with built-in checks."""
    registry = CheckRegistry()
    for name, cls in built_in_check_factories().items():
        registry.register(name, cls)
    return registry
