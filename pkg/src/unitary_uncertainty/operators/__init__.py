from unitary_uncertainty.operators.dft import commutation_phase, dft_pair, k_from_phase
from unitary_uncertainty.operators.examples import canonical_complement, example_state

__all__ = ["canonical_complement", "commutation_phase", "dft_pair", "example_state", "k_from_phase"]
