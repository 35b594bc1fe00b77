"""
Tests for the comparison bounds: BPUUR1/2, BUUR and the Massar-Spindel relation.
"""

import math
import unittest
from unittest.mock import patch

import numpy as np

from unitary_uncertainty.core.errors import CommutationError, PerpendicularStateError
from unitary_uncertainty.core.models import BoundName, SignChoice, VarianceValue
from unitary_uncertainty.linalg import (
    Operator,
    PureState,
    complete_complement,
    random_pure_state,
    random_unitary,
)
from unitary_uncertainty.operators import canonical_complement, dft_pair, example_state
from unitary_uncertainty.uncertainty import (
    bpuur1_bound,
    bpuur2_bound,
    buur_bound,
    covariance,
    hierarchical_sum_bound,
    msuur_check,
    msuur_sum_lower_bound,
    unitary_variance,
)

SIGMA_Z = Operator.unitary(np.diag([1.0, -1.0]))
SIGMA_X = Operator.unitary(np.array([[0.0, 1.0], [1.0, 0.0]]))


def qubit_state(theta):
    return PureState(np.array([math.cos(theta), -math.sin(theta)]))


class TestBpuur1(unittest.TestCase):
    def test_equal_operators_double_the_variance(self):
        u = random_unitary(3, 4)
        psi = random_pure_state(3, 5)
        self.assertAlmostEqual(bpuur1_bound(u, u, psi).value, 2 * unitary_variance(u, psi).value, places=12)

    def test_pauli_pair(self):
        for theta in (0.2, 0.7, 1.3):
            self.assertAlmostEqual(bpuur1_bound(SIGMA_Z, SIGMA_X, qubit_state(theta)).value, 1.0, places=12)

    def test_dft_pair_at_quarter_angle(self):
        pair = dft_pair(3)
        bound = bpuur1_bound(pair.clock, pair.shift, example_state(3, math.pi / 4))
        self.assertIs(bound.name, BoundName.BPUUR1)
        self.assertAlmostEqual(bound.value, 1.125, places=12)
        self.assertLess(bound.value, 1.5)

    def test_below_sum_for_random_pairs(self):
        for seed in range(10):
            u = random_unitary(4, (seed, 0))
            v = random_unitary(4, (seed, 1))
            psi = random_pure_state(4, (seed, 2))
            lhs = unitary_variance(u, psi).value + unitary_variance(v, psi).value
            self.assertLessEqual(bpuur1_bound(u, v, psi).value, lhs + 1e-10)


class TestBpuur2(unittest.TestCase):
    def test_qubit_matches_first_order_hierarchy(self):
        psi = qubit_state(0.6)
        basis = complete_complement(psi)
        for s in SignChoice:
            a = bpuur2_bound(SIGMA_Z, SIGMA_X, psi, basis.vectors[0], s).value
            b = hierarchical_sum_bound(SIGMA_Z, SIGMA_X, psi, basis, 1, s).value
            self.assertAlmostEqual(a, b, places=12)

    def test_non_orthogonal_vector_rejected(self):
        psi = random_pure_state(3, 1)
        u = random_unitary(3, 2)
        with self.assertRaises(PerpendicularStateError):
            bpuur2_bound(u, u, psi, psi.amplitudes, SignChoice.PLUS)

    def test_unnormalized_vector_rejected(self):
        psi = PureState(np.array([1.0, 0.0, 0.0]))
        u = random_unitary(3, 2)
        with self.assertRaises(PerpendicularStateError):
            bpuur2_bound(u, u, psi, [0.0, 2.0, 0.0], SignChoice.PLUS)

    def test_vector_orthogonal_to_f_leaves_covariance_term(self):
        u = random_unitary(3, 6)
        v = random_unitary(3, 7)
        psi = random_pure_state(3, 8)
        im_cov = covariance(u, v, psi).imag
        for s in SignChoice:
            f = u.apply(psi) - 1j * s.factor * v.apply(psi)
            perp = complete_complement(psi, [f]).vectors[1]
            self.assertAlmostEqual(bpuur2_bound(u, v, psi, perp, s).value, -2 * s.factor * im_cov, places=12)

    def test_dft_canonical_vector_below_sum(self):
        pair = dft_pair(3)
        theta = math.pi / 4
        basis = canonical_complement(3, theta)
        for s in SignChoice:
            value = bpuur2_bound(pair.clock, pair.shift, example_state(3, theta), basis.vectors[0], s).value
            self.assertLessEqual(value, 1.5 + 1e-12)


class TestBuur(unittest.TestCase):
    def test_equal_operators(self):
        u = random_unitary(3, 9)
        psi = random_pure_state(3, 10)
        self.assertAlmostEqual(buur_bound(u, u, psi).value, unitary_variance(u, psi).value ** 2, places=12)

    def test_pauli_pair_is_tight(self):
        psi = qubit_state(0.35)
        lhs = unitary_variance(SIGMA_Z, psi).value * unitary_variance(SIGMA_X, psi).value
        self.assertAlmostEqual(buur_bound(SIGMA_Z, SIGMA_X, psi).value, lhs, places=12)

    def test_dft_pair(self):
        pair = dft_pair(3)
        psi = example_state(3, math.pi / 4)
        self.assertAlmostEqual(buur_bound(pair.clock, pair.shift, psi).value, 3 / 16, places=12)
        pair = dft_pair(4)
        psi = example_state(4, math.pi / 3)
        lhs = unitary_variance(pair.clock, psi).value * unitary_variance(pair.shift, psi).value
        self.assertLessEqual(buur_bound(pair.clock, pair.shift, psi).value, lhs + 1e-12)


class TestMsuur(unittest.TestCase):
    def test_pauli_pair_saturates(self):
        for theta in (0.0, 0.4, math.pi / 4, 1.1):
            check = msuur_check(SIGMA_Z, SIGMA_X, qubit_state(theta), math.inf)
            self.assertIsNone(check.value)
            self.assertAlmostEqual(check.residual, 0.0, places=12)
            self.assertTrue(check.holds)

    def test_holds_over_the_theta_grid(self):
        for dim in (3, 4, 5, 6):
            pair = dft_pair(dim)
            k = math.tan(math.pi / dim)
            for theta in np.linspace(0.0, math.pi / 2, 51):
                check = msuur_check(pair.clock, pair.shift, example_state(dim, float(theta)), k)
                self.assertTrue(check.holds, f"d={dim} theta={theta}")
                self.assertGreaterEqual(check.residual, -1e-10)

    def test_holds_for_random_states(self):
        pair = dft_pair(5)
        k = math.tan(math.pi / 5)
        for seed in range(20):
            self.assertTrue(msuur_check(pair.clock, pair.shift, random_pure_state(5, seed), k).holds)

    def test_holds_tests_the_undivided_value(self):
        pair = dft_pair(3)
        psi = random_pure_state(3, 5)
        k = math.sqrt(3.0)
        k2 = k * k
        # x = y just inside the violating side of (1+2K) x^2 + 2K^2 x - K^2 = 0
        boundary = (-k2 + math.sqrt(k2 * k2 + (1.0 + 2.0 * k) * k2)) / (1.0 + 2.0 * k)
        slope = 2.0 * (1.0 + 2.0 * k) * boundary + 2.0 * k2
        x = boundary - 2e-10 / slope
        with patch("unitary_uncertainty.uncertainty.baselines.unitary_variance", return_value=VarianceValue(x)):
            check = msuur_check(pair.clock, pair.shift, psi, k)
        self.assertLess(check.value, -1e-10)
        self.assertGreater(check.value, -1e-10 * k2)
        self.assertGreaterEqual(check.residual, -1e-10)
        self.assertFalse(check.holds)

    def test_commuting_pair_uses_product_form(self):
        u = random_unitary(3, 2)
        psi = random_pure_state(3, 3)
        check = msuur_check(u, u, psi, 0.0)
        x = unitary_variance(u, psi).value
        self.assertAlmostEqual(check.residual, x * x, places=12)

    def test_wrong_constant_rejected(self):
        pair = dft_pair(4)
        with self.assertRaises(CommutationError):
            msuur_check(pair.clock, pair.shift, random_pure_state(4, 1), 2.0)

    def test_negative_constant_rejected(self):
        pair = dft_pair(4)
        with self.assertRaises(ValueError):
            msuur_check(pair.clock, pair.shift, random_pure_state(4, 1), -1.0)

    def test_non_commuting_pair_rejected(self):
        with self.assertRaises(CommutationError):
            msuur_check(random_unitary(3, 1), random_unitary(3, 2), random_pure_state(3, 3), 1.0)


class TestMsuurSumLowerBound(unittest.TestCase):
    def test_closed_forms(self):
        self.assertEqual(msuur_sum_lower_bound(math.inf), 1.0)
        self.assertAlmostEqual(msuur_sum_lower_bound(1.0), 2 / 3, places=15)
        k = math.tan(math.pi / 3)
        self.assertAlmostEqual(msuur_sum_lower_bound(k), 2 * math.sqrt(3) / (1 + 2 * math.sqrt(3)), places=14)

    def test_non_positive_constant_rejected(self):
        for k in (0.0, -1.0, float("nan")):
            with self.assertRaises(ValueError):
                msuur_sum_lower_bound(k)

    def test_matches_grid_minimisation(self):
        grid = np.linspace(0.0, 1.0, 1001)
        x, y = np.meshgrid(grid, grid)
        for dim in (3, 4, 5, 6):
            k = math.tan(math.pi / dim)
            feasible = (1 + 2 * k) * x * y + k * k * (x + y) - k * k >= 0.0
            grid_min = float(np.min((x + y)[feasible]))
            closed = msuur_sum_lower_bound(k)
            self.assertLessEqual(closed, grid_min + 1e-12)
            self.assertLess(grid_min - closed, 3e-3)

    def test_below_best_sign_first_order_on_dft_example(self):
        pair = dft_pair(3)
        theta = math.pi / 4
        psi = example_state(3, theta)
        basis = canonical_complement(3, theta)
        best = max(hierarchical_sum_bound(pair.clock, pair.shift, psi, basis, 1, s).value for s in SignChoice)
        self.assertAlmostEqual(best, 1.0, places=12)
        self.assertLessEqual(msuur_sum_lower_bound(math.tan(math.pi / 3)), best)

    def test_sums_on_random_states_respect_the_bound(self):
        pair = dft_pair(4)
        bound = msuur_sum_lower_bound(math.tan(math.pi / 4))
        for seed in range(20):
            psi = random_pure_state(4, seed)
            lhs = unitary_variance(pair.clock, psi).value + unitary_variance(pair.shift, psi).value
            self.assertGreaterEqual(lhs, bound - 1e-10)


if __name__ == "__main__":
    unittest.main()
