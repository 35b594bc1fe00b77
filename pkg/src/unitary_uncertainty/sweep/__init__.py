from unitary_uncertainty.sweep.engine import SweepEngine, theta_grid
from unitary_uncertainty.sweep.validators import EqualityColumnsValidator, Validator

__all__ = ["EqualityColumnsValidator", "SweepEngine", "Validator", "theta_grid"]
