"""
Tests for the one-shot uncertainty report.
"""

import math
import unittest

from unitary_uncertainty.core.errors import SubsetSizeError
from unitary_uncertainty.core.models import BoundName, SignChoice, SignPolicy
from unitary_uncertainty.linalg import random_complement, random_pure_state, random_unitary
from unitary_uncertainty.operators import canonical_complement, dft_pair, example_state
from unitary_uncertainty.uncertainty import full_report


def dft_report(dim, theta, n_values, **kwargs):
    pair = dft_pair(dim)
    psi = example_state(dim, theta)
    return full_report(pair.clock, pair.shift, psi, canonical_complement(dim, theta), n_values, **kwargs)


class TestFullReportOnDftExample(unittest.TestCase):
    def setUp(self):
        self.report = dft_report(3, math.pi / 4, [1, 2])

    def test_left_hand_sides(self):
        self.assertAlmostEqual(self.report.dU2.value, 0.75, places=12)
        self.assertAlmostEqual(self.report.dV2.value, 0.75, places=12)
        self.assertAlmostEqual(self.report.lhs_sum, 1.5, places=12)
        self.assertAlmostEqual(self.report.cov.real, -3 / 8, places=12)
        self.assertAlmostEqual(self.report.cov.imag, math.sqrt(3) / 8, places=12)

    def test_equalities_hold_for_both_signs(self):
        for s in SignChoice:
            self.assertAlmostEqual(self.report.value_of(BoundName.UUES_RHS, sign=s), 1.5, places=10)
            self.assertAlmostEqual(self.report.value_of(BoundName.UUEP_RHS, sign=s), 0.75, places=10)

    def test_baselines(self):
        self.assertAlmostEqual(self.report.value_of(BoundName.BPUUR1), 1.125, places=12)
        self.assertAlmostEqual(self.report.value_of(BoundName.BUUR), 3 / 16, places=12)
        k = math.sqrt(3)
        self.assertAlmostEqual(self.report.value_of(BoundName.MSUUR_SUM), 2 * k / (1 + 2 * k), places=12)

    def test_hierarchy(self):
        first = self.report.find(BoundName.UURS_N, order=1)
        second = self.report.find(BoundName.UURS_N, order=2)
        self.assertLessEqual(first.value, second.value + 1e-12)
        self.assertAlmostEqual(second.value, 1.5, places=10)
        self.assertAlmostEqual(self.report.value_of(BoundName.UURP_N, order=2), 0.75, places=10)
        self.assertEqual(first.label, "UURS1")

    def test_bpuur2_matches_first_order(self):
        bpuur2 = self.report.find(BoundName.BPUUR2)
        first = self.report.find(BoundName.UURS_N, order=1)
        self.assertAlmostEqual(bpuur2.value, first.value, places=12)

    def test_commutation_entries(self):
        self.assertAlmostEqual(self.report.commutation_phase, 2 * math.pi / 3, places=12)
        self.assertTrue(self.report.msuur.holds)
        self.assertAlmostEqual(self.report.msuur.k, math.sqrt(3), places=10)


class TestFullReportEdgeCases(unittest.TestCase):
    def test_fixed_sign_policy(self):
        report = dft_report(4, 0.6, [1, 2], sign_policy=SignPolicy.MINUS)
        for name in (BoundName.UURS_N, BoundName.UURP_N, BoundName.BPUUR2):
            for b in report.bounds:
                if b.name is name:
                    self.assertIs(b.sign_used, SignChoice.MINUS)

    def test_degenerate_product_entries_left_out(self):
        report = dft_report(4, 0.0, [1, 2])
        self.assertEqual(report.dU2.value, 0.0)
        self.assertIsNone(report.find(BoundName.UUEP_RHS))
        self.assertIsNone(report.find(BoundName.UURP_N))
        self.assertAlmostEqual(report.value_of(BoundName.UUES_RHS), report.lhs_sum, places=10)

    def test_generic_pair_has_no_msuur_entries(self):
        u = random_unitary(3, 1)
        v = random_unitary(3, 2)
        psi = random_pure_state(3, 3)
        report = full_report(u, v, psi, random_complement(psi, 4), [1, 2])
        self.assertIsNone(report.commutation_phase)
        self.assertIsNone(report.msuur)
        self.assertIsNone(report.find(BoundName.MSUUR_SUM))
        for s in SignChoice:
            self.assertAlmostEqual(report.value_of(BoundName.UUES_RHS, sign=s), report.lhs_sum, places=10)

    def test_order_out_of_range(self):
        with self.assertRaises(SubsetSizeError):
            dft_report(3, 0.5, [3])


if __name__ == "__main__":
    unittest.main()
