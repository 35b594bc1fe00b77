"""
Tests for the clock/shift pair, commutation phases and the example state family.
"""

import math
import unittest

import numpy as np

from unitary_uncertainty.core.errors import CommutationError, InvalidOperatorError, InvalidStateError
from unitary_uncertainty.core.models import DftPair
from unitary_uncertainty.linalg import Operator, random_unitary
from unitary_uncertainty.operators import canonical_complement, commutation_phase, dft_pair, example_state, k_from_phase
from unitary_uncertainty.uncertainty import nonzero_term_count, unitary_variance, visibility


class TestDftPair(unittest.TestCase):
    def test_qubit_pair_is_pauli(self):
        pair = dft_pair(2)
        np.testing.assert_allclose(pair.clock.entries, np.diag([1.0, -1.0]), atol=1e-15)
        np.testing.assert_array_equal(pair.shift.entries, [[0, 1], [1, 0]])

    def test_shift_moves_basis_states_forward(self):
        shift = dft_pair(4).shift.entries
        for k in range(4):
            np.testing.assert_array_equal(shift @ np.eye(4)[k], np.eye(4)[(k + 1) % 4])

    def test_commutation_relation_residual(self):
        for dim in range(2, 65):
            pair = dft_pair(dim)
            u, v = pair.clock.entries, pair.shift.entries
            self.assertLessEqual(float(np.max(np.abs(u @ v - pair.omega * (v @ u)))), 1e-12)

    def test_dimension_below_two_rejected(self):
        with self.assertRaises(InvalidOperatorError):
            dft_pair(1)

    def test_inconsistent_pair_rejected(self):
        pair = dft_pair(3)
        with self.assertRaises(InvalidOperatorError):
            DftPair(clock=pair.clock, shift=pair.shift, omega=1.0)


class TestCommutationPhase(unittest.TestCase):
    def test_dft_phase(self):
        for dim in range(3, 12):
            pair = dft_pair(dim)
            phi = commutation_phase(pair.clock, pair.shift)
            self.assertAlmostEqual(phi, 2 * math.pi / dim, places=12)
            self.assertAlmostEqual(k_from_phase(phi), math.tan(math.pi / dim), places=10)

    def test_qubit_phase_sits_at_pi(self):
        pair = dft_pair(2)
        phi = commutation_phase(pair.clock, pair.shift)
        self.assertAlmostEqual(phi, math.pi, places=12)
        self.assertTrue(math.isinf(k_from_phase(phi)))

    def test_commuting_pair(self):
        u = random_unitary(4, 3)
        self.assertAlmostEqual(commutation_phase(u, u), 0.0, places=12)
        self.assertAlmostEqual(k_from_phase(0.0), 0.0, places=15)

    def test_generic_pair_has_no_scalar_phase(self):
        with self.assertRaises(CommutationError):
            commutation_phase(random_unitary(3, 1), random_unitary(3, 2))

    def test_requires_unitary_operators(self):
        with self.assertRaises(InvalidOperatorError):
            commutation_phase(Operator.general(np.eye(2)), dft_pair(2).shift)


class TestExampleState(unittest.TestCase):
    def test_endpoints(self):
        np.testing.assert_allclose(example_state(4, 0.0).amplitudes, [1, 0, 0, 0], atol=1e-15)
        np.testing.assert_allclose(example_state(4, math.pi / 2).amplitudes, [0, 0, 0, -1], atol=1e-15)

    def test_quarter_angle(self):
        c = math.sqrt(0.5)
        np.testing.assert_allclose(example_state(3, math.pi / 4).amplitudes, [c, 0, -c], atol=1e-15)

    def test_theta_out_of_range(self):
        for theta in (-0.1, math.pi / 2 + 0.01):
            with self.assertRaises(InvalidStateError):
                example_state(3, theta)

    def test_qubit_variances_trade_off(self):
        pair = dft_pair(2)
        for theta in np.linspace(0.0, math.pi / 2, 201):
            psi = example_state(2, float(theta))
            total = unitary_variance(pair.clock, psi).value + unitary_variance(pair.shift, psi).value
            self.assertAlmostEqual(total, 1.0, places=12)
            vis = visibility(pair.clock, psi) ** 2 + visibility(pair.shift, psi) ** 2
            self.assertAlmostEqual(vis, 1.0, places=12)


class TestCanonicalComplement(unittest.TestCase):
    def test_qubit_complement(self):
        theta = 0.3
        basis = canonical_complement(2, theta)
        np.testing.assert_allclose(basis.vectors, [[math.sin(theta), math.cos(theta)]], atol=1e-15)

    def test_layout(self):
        theta = math.pi / 6
        basis = canonical_complement(5, theta)
        self.assertEqual(len(basis), 4)
        np.testing.assert_allclose(basis.vectors[0], [math.sin(theta), 0, 0, 0, math.cos(theta)], atol=1e-15)
        np.testing.assert_array_equal(basis.vectors[1:], np.eye(5)[1:4])

    def test_valid_over_the_grid(self):
        for dim in range(2, 9):
            for theta in np.linspace(0.0, math.pi / 2, 101):
                basis = canonical_complement(dim, float(theta))
                self.assertTrue(basis.complements(example_state(dim, float(theta))))

    def test_two_nonzero_summands(self):
        for dim in (5, 6):
            pair = dft_pair(dim)
            theta = math.pi / 5
            count = nonzero_term_count(pair.clock, pair.shift, example_state(dim, theta), canonical_complement(dim, theta))
            self.assertEqual(count, 2)


if __name__ == "__main__":
    unittest.main()
