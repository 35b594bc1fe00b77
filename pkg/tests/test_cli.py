"""
End-to-end tests for the command-line entry point and its exit codes.
"""

import contextlib
import io
import os
import tempfile
import unittest
from unittest.mock import patch

import yaml

from unitary_uncertainty.main import EXIT_IO, EXIT_OK, EXIT_PROPERTY_FAILURE, EXIT_USAGE, build_parser, main
from unitary_uncertainty.sinks import read_csv, read_json

LOG_CONFIG = os.path.join(os.path.dirname(__file__), "..", "configs", "logging.yaml")


def run_cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(["--log-config", LOG_CONFIG, "--log-level", "warning", *argv])
    return code, out.getvalue(), err.getvalue()


class TestParser(unittest.TestCase):
    def test_subcommand_required(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                build_parser().parse_args([])
        self.assertEqual(ctx.exception.code, 2)

    def test_repeated_flags_accumulate(self):
        args = build_parser().parse_args(["sweep", "--dim", "4", "--n", "1", "--n", "3", "--tol", "eq_tol=1e-9"])
        self.assertEqual(args.n_values, [1, 3])
        self.assertEqual(args.tol, ["eq_tol=1e-9"])


class TestVerifyCommand(unittest.TestCase):
    def test_passes_and_prints_summary(self):
        code, out, _ = run_cli("verify", "--dims", "2", "3", "--trials", "2", "--seed", "1")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "verify: dims=[2, 3] trials=2 seed=1")
        self.assertEqual(lines[-1], "result: PASS")
        self.assertTrue(any(line.startswith("unitary_sum_equality") for line in lines))

    def test_output_is_deterministic(self):
        argv = ("verify", "--dims", "3", "4", "--trials", "2", "--seed", "7", "--check", "unitary_sum_equality")
        first = run_cli(*argv)[1]
        second = run_cli(*argv)[1]
        threaded = run_cli(*argv, "--workers", "4")[1]
        self.assertEqual(first, second)
        self.assertEqual(first, threaded)

    def test_property_failure_exit_code(self):
        code, out, _ = run_cli(
            "verify", "--dims", "3", "4", "--trials", "5", "--check", "unitary_sum_equality", "--tol", "eq_tol=1e-30"
        )
        self.assertEqual(code, EXIT_PROPERTY_FAILURE)
        self.assertIn("result: FAIL", out)

    def test_unknown_check(self):
        code, _, err = run_cli("verify", "--dims", "2", "--trials", "1", "--check", "no_such_check")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("no_such_check", err)

    def test_verify_config_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "verify.yaml")
            with open(path, "w", encoding="utf-8") as f:
                yaml.safe_dump({"verify": {"dims": [2], "trials": 1, "checks": ["covariance_symmetry"]}}, f)
            code, out, _ = run_cli("verify", "--config", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines()[0], "verify: dims=[2] trials=1 seed=0")


class TestSweepCommand(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def test_writes_json(self):
        path = os.path.join(self.tmp.name, "out", "d3.json")
        code, out, _ = run_cli(
            "sweep", "--dim", "3", "--n", "1", "--n", "2", "--theta-steps", "11", "--format", "json", "--output", path
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), f"sweep: dim=3 rows=11 invalid=0 format=json output={path}")
        doc = read_json(path)
        self.assertEqual(doc["metadata"]["n_values"], [1, 2])
        self.assertEqual(len(doc["rows"]), 11)

    def test_cli_flags_override_config(self):
        config = os.path.join(self.tmp.name, "sweep.yaml")
        with open(config, "w", encoding="utf-8") as f:
            yaml.safe_dump({"sweep": {"dim": 4, "n_values": [1, 2, 3], "theta_steps": 201}}, f)
        path = os.path.join(self.tmp.name, "d4.csv")
        code, _, _ = run_cli("sweep", "--config", config, "--theta-steps", "6", "--output", path)
        self.assertEqual(code, EXIT_OK)
        header, rows = read_csv(path)
        self.assertEqual(len(rows), 6)
        self.assertIn("lb_uurp_3", header)

    def test_invalid_order(self):
        code, _, err = run_cli("sweep", "--dim", "3", "--n", "3", "--output", os.path.join(self.tmp.name, "x.csv"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("n_values", err)

    def test_unknown_tolerance(self):
        code, _, _ = run_cli("sweep", "--dim", "3", "--tol", "bogus=1", "--output", os.path.join(self.tmp.name, "x.csv"))
        self.assertEqual(code, EXIT_USAGE)

    def test_missing_config(self):
        code, _, err = run_cli("sweep", "--config", os.path.join(self.tmp.name, "missing.yaml"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("missing.yaml", err)

    def test_unwritable_output(self):
        blocker = os.path.join(self.tmp.name, "blocker")
        with open(blocker, "w", encoding="utf-8") as f:
            f.write("not a directory")
        code, _, _ = run_cli("sweep", "--dim", "2", "--theta-steps", "3", "--output", os.path.join(blocker, "x.csv"))
        self.assertEqual(code, EXIT_IO)

    def test_missing_output_location_is_an_io_error(self):
        gone = FileNotFoundError(2, "No such file or directory", "gone/x.csv")
        path = os.path.join(self.tmp.name, "x.csv")
        with patch("unitary_uncertainty.sinks.csv_sink.ensure_parent_dir", side_effect=gone):
            code, _, err = run_cli("sweep", "--dim", "2", "--theta-steps", "3", "--output", path)
        self.assertEqual(code, EXIT_IO)
        self.assertIn("I/O error", err)
        self.assertNotIn("Configuration loading failed", err)

    def test_missing_config_with_valid_output(self):
        code, _, err = run_cli(
            "limit",
            "--config",
            os.path.join(self.tmp.name, "missing.yaml"),
            "--output",
            os.path.join(self.tmp.name, "limit.csv"),
        )
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("Configuration loading failed", err)
        self.assertFalse(os.path.exists(os.path.join(self.tmp.name, "limit.csv")))


class TestLimitCommand(unittest.TestCase):
    def test_writes_study_and_reports_skips(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "limit.csv")
            code, out, _ = run_cli("limit", "--dims", "3", "4", "5", "--output", path)
            header, rows = read_csv(path)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("skipped (branch cut): [4]", out)
        self.assertIn("variance_u: d=3..5", out)
        self.assertEqual(header, ["dim", "quantity", "lhs_unitary", "lhs_scaled_hermitian", "relative_error"])
        self.assertEqual(len(rows), 8)

    def test_only_even_dims(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, _, err = run_cli("limit", "--dims", "2", "4", "--output", os.path.join(tmp, "limit.csv"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("branch cut", err)


if __name__ == "__main__":
    unittest.main()
