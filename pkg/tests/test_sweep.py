"""
Integration tests for the figure sweep: dominance claims on the DFT example,
row validation and the CSV/JSON outputs.
"""

import math
import os
import tempfile
import unittest

from unitary_uncertainty.core.errors import SubsetSizeError
from unitary_uncertainty.core.factory import ComponentFactory
from unitary_uncertainty.core.models import SignPolicy, SweepJob, SweepTable, ValidationResult
from unitary_uncertainty.sinks import CsvSink, JsonSink, read_csv, read_json
from unitary_uncertainty.sweep import EqualityColumnsValidator, SweepEngine, theta_grid
from unitary_uncertainty.uncertainty import msuur_sum_lower_bound

TOL = 1e-10


def run_sweep(dim, n_values, policy=SignPolicy.BEST, steps=201, workers=1):
    engine = SweepEngine(validator=EqualityColumnsValidator())
    job = SweepJob(dim=dim, n_values=tuple(n_values), theta_steps=steps, sign_policy=policy, workers=workers)
    return engine.run(job)


class RejectFromTheta:
    """Marks every row at or beyond a threshold angle invalid."""

    def __init__(self, threshold):
        self.threshold = threshold

    def validate(self, row, tol):
        if row.theta >= self.threshold:
            return ValidationResult(False, "rejected_by_test")
        return ValidationResult(True)


class TestThetaGrid(unittest.TestCase):
    def test_endpoints_included(self):
        grid = theta_grid(201)
        self.assertEqual(len(grid), 201)
        self.assertEqual(grid[0], 0.0)
        self.assertEqual(grid[-1], math.pi / 2)

    def test_too_few_steps(self):
        with self.assertRaises(ValueError):
            theta_grid(1)


class TestSweepClaims(unittest.TestCase):
    def test_every_row_reproduces_the_equalities(self):
        for dim in range(2, 7):
            table, report = run_sweep(dim, range(1, dim))
            self.assertTrue(report.ok, report.failures)
            self.assertEqual(report.rows_emitted, 201)
            for row in table.rows:
                self.assertLessEqual(abs(row.rhs_uues - row.lhs_sum), TOL)
                if row.rhs_uuep_sq is not None:
                    self.assertLessEqual(abs(row.rhs_uuep_sq - row.lhs_prod), TOL)

    def test_qubit_rows_saturate(self):
        table, _ = run_sweep(2, [1])
        for row in table.rows:
            self.assertAlmostEqual(row.lhs_sum, 1.0, places=12)
            self.assertAlmostEqual(row.lb_uurs[1], row.lhs_sum, places=10)
            self.assertEqual(row.lb_msuur, 1.0)
            self.assertAlmostEqual(row.visibility_u**2 + row.visibility_v**2, 1.0, places=12)

    def test_best_sign_first_order_beats_msuur(self):
        for dim in range(3, 7):
            table, _ = run_sweep(dim, [1])
            expected = msuur_sum_lower_bound(math.tan(math.pi / dim))
            for row in table.rows:
                self.assertAlmostEqual(row.lb_msuur, expected, places=12)
                self.assertGreaterEqual(row.lb_uurs[1], row.lb_msuur - TOL, f"d={dim} theta={row.theta}")
                self.assertGreaterEqual(row.msuur_residual, -TOL)

    def test_upper_sign_first_order_stays_below_bpuur1(self):
        for dim in range(3, 7):
            table, _ = run_sweep(dim, [1], policy=SignPolicy.PLUS)
            for row in table.rows:
                self.assertLessEqual(row.lb_uurs[1], row.lb_bpuur1 + TOL, f"d={dim} theta={row.theta}")

    def test_second_order_saturates(self):
        for dim in range(3, 7):
            table, _ = run_sweep(dim, [2])
            for row in table.rows:
                self.assertAlmostEqual(row.lb_uurs[2], row.lhs_sum, places=10)
                if row.lb_uurp[2] is not None:
                    self.assertLessEqual(abs(row.lb_uurp[2] - row.lhs_prod), TOL)

    def test_second_order_exceeds_bpuur1_somewhere(self):
        table, _ = run_sweep(3, [2])
        self.assertTrue(any(row.lb_uurs[2] > row.lb_bpuur1 + 1e-9 for row in table.rows))
        middle = table.rows[100]
        self.assertAlmostEqual(middle.theta, math.pi / 4, places=15)
        self.assertAlmostEqual(middle.lb_uurs[2], 1.5, places=12)
        self.assertAlmostEqual(middle.lb_bpuur1, 1.125, places=12)
        self.assertAlmostEqual(middle.lb_buur, 3 / 16, places=12)

    def test_first_order_product_dominates_buur(self):
        for dim in range(3, 7):
            for policy in (SignPolicy.PLUS, SignPolicy.MINUS):
                table, _ = run_sweep(dim, [1], policy=policy)
                for row in table.rows:
                    if row.lb_uurp[1] is not None:
                        self.assertGreaterEqual(row.lb_uurp[1], row.lb_buur - TOL)

    def test_undefined_product_cells_at_theta_zero(self):
        table, _ = run_sweep(4, [1, 2])
        first = table.rows[0]
        self.assertEqual(first.theta, 0.0)
        self.assertIsNone(first.rhs_uuep_sq)
        self.assertIsNone(first.lb_uurp[1])
        self.assertEqual(first.lhs_prod, 0.0)

    def test_two_nonzero_summands_inside_the_grid(self):
        table, _ = run_sweep(5, [1])
        for row in table.rows[1:-1]:
            self.assertEqual(row.nonzero_term_count, 2)

    def test_order_out_of_range(self):
        with self.assertRaises(SubsetSizeError):
            run_sweep(3, [3])


class TestSweepValidation(unittest.TestCase):
    def test_invalid_rows_are_counted_and_dropped(self):
        engine = SweepEngine(validator=RejectFromTheta(math.pi / 4))
        table, report = engine.run(SweepJob(dim=3, n_values=(1,), theta_steps=5))
        self.assertEqual(report.rows_evaluated, 5)
        self.assertEqual(report.rows_emitted, 2)
        self.assertEqual(report.rows_invalid, 3)
        self.assertEqual(report.failures, {"rejected_by_test": 3})
        self.assertFalse(report.ok)
        self.assertEqual(len(table.rows), 2)


class TestSweepOutputs(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, "nested", name)

    def test_csv_round_trip(self):
        table, _ = run_sweep(4, [1, 2], steps=21)
        path = self.path("sweep.csv")
        CsvSink().write(table, path)
        header, rows = read_csv(path)
        self.assertEqual(header, table.columns())
        self.assertEqual(header[:3], ["theta", "lhs_sum", "lhs_prod"])
        self.assertIn("lb_uurs_2", header)
        self.assertEqual(rows, table.records_as_dicts())

    def test_json_round_trip(self):
        table, _ = run_sweep(4, [1, 2], steps=21)
        path = self.path("sweep.json")
        JsonSink().write(table, path)
        doc = read_json(path)
        self.assertEqual(doc["metadata"], {"kind": "sweep", "dim": 4, "n_values": [1, 2], "sign_policy": "best"})
        self.assertEqual(doc["columns"], table.columns())
        self.assertEqual(doc["rows"], table.records_as_dicts())
        self.assertIsNone(doc["rows"][0]["rhs_uuep_sq"])
        restored = SweepTable.from_records(doc["metadata"], doc["rows"])
        self.assertEqual(restored.rows, table.rows)

    def test_csv_and_json_agree(self):
        table, _ = run_sweep(3, [1, 2], steps=11)
        CsvSink().write(table, self.path("a.csv"))
        JsonSink().write(table, self.path("a.json"))
        _, csv_rows = read_csv(self.path("a.csv"))
        self.assertEqual(csv_rows, read_json(self.path("a.json"))["rows"])

    def test_worker_count_does_not_change_bytes(self):
        paths = []
        for workers in (1, 4):
            table, _ = run_sweep(5, [1, 2], steps=41, workers=workers)
            path = self.path(f"w{workers}.csv")
            CsvSink().write(table, path)
            paths.append(path)
        with open(paths[0], "rb") as a, open(paths[1], "rb") as b:
            self.assertEqual(a.read(), b.read())

    def test_factory_wires_sink_into_engine(self):
        path = self.path("factory.json")
        job = SweepJob(dim=3, n_values=(1,), theta_steps=5, output_path=path, fmt="json")
        built = ComponentFactory().build_sweep(job)
        self.assertIsInstance(built.sink, JsonSink)
        table, report = built.engine.run(job)
        self.assertTrue(report.ok)
        self.assertEqual(len(read_json(path)["rows"]), 5)

    def test_unknown_format(self):
        with self.assertRaises(KeyError):
            ComponentFactory().sink("parquet")


if __name__ == "__main__":
    unittest.main()
