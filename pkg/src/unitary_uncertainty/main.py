from __future__ import annotations

import argparse
import sys
from typing import Any, Dict, List, Optional

from unitary_uncertainty.config_models import (
    ConfigLoadError,
    LimitJobConfig,
    SweepJobConfig,
    VerifyJobConfig,
    config_to_limit_job,
    config_to_sweep_job,
    config_to_verify_job,
    load_raw_config,
    parse_tol_overrides,
    validate_config,
)
from unitary_uncertainty.core.errors import BranchCutError, UncertaintyError
from unitary_uncertainty.core.factory import ComponentFactory
from unitary_uncertainty.limit.convergence import convergence_study, decay_summary
from unitary_uncertainty.utils.logging import setup_logging

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uncertainty", description="Unitary uncertainty relations toolkit")
    parser.add_argument("--log-config", default="configs/logging.yaml", help="YAML logging configuration")
    parser.add_argument("--log-level", default=None, help="Override the package log level (DEBUG, INFO, ...)")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE", help="Override one tolerance")
    common.add_argument("--workers", type=int, default=None, help="Worker threads")

    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="Run the property verification suite")
    verify.add_argument("--config", default=None, help="YAML verification configuration")
    verify.add_argument("--dims", type=int, nargs="+", default=None)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--check", action="append", default=None, dest="checks", help="Run only this check")

    sweep = sub.add_parser("sweep", parents=[common], help="Emit figure curve data for one dimension")
    sweep.add_argument("--config", default=None, help="YAML sweep configuration")
    sweep.add_argument("--dim", type=int, default=None)
    sweep.add_argument("--theta-steps", type=int, default=None, dest="theta_steps")
    sweep.add_argument("--n", type=int, action="append", default=None, dest="n_values")
    sweep.add_argument("--sign", choices=["best", "plus", "minus"], default=None, dest="sign_policy")
    sweep.add_argument("--format", choices=["csv", "json"], default=None)
    sweep.add_argument("--output", default=None, dest="output_path")

    limit = sub.add_parser("limit", parents=[common], help="Run the large-d convergence study")
    limit.add_argument("--config", default=None, help="YAML limit configuration")
    limit.add_argument("--dims", type=int, nargs="+", default=None, dest="d_values")
    limit.add_argument("--seed", type=int, default=None)
    limit.add_argument("--format", choices=["csv", "json"], default=None)
    limit.add_argument("--output", default=None, dest="output_path")

    return parser


def _overlay(raw: Dict[str, Any], section: str, args: argparse.Namespace, keys: List[str]) -> Dict[str, Any]:
    """Explicit CLI flags override the YAML section; --tol overrides the tolerances block."""
    merged = dict(raw)
    body = dict(merged.get(section) or {})
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            body[key] = value
    merged[section] = body
    tolerances = dict(merged.get("tolerances") or {})
    tolerances.update(parse_tol_overrides(args.tol))
    merged["tolerances"] = tolerances
    return merged


def _raw(args: argparse.Namespace) -> Dict[str, Any]:
    path = getattr(args, "config", None)
    if not path:
        return {}
    try:
        return load_raw_config(path)
    except FileNotFoundError as e:
        raise ConfigLoadError(str(e)) from e


def cmd_verify(args: argparse.Namespace, factory: ComponentFactory) -> int:
    raw = _overlay(_raw(args), "verify", args, ["dims", "trials", "seed", "checks", "workers"])
    job = config_to_verify_job(validate_config(raw, VerifyJobConfig, args.config or "<arguments>"))
    result = factory.build_verifier().run(job)
    for line in result.summary_lines():
        print(line)
    return EXIT_OK if result.ok else EXIT_PROPERTY_FAILURE


def cmd_sweep(args: argparse.Namespace, factory: ComponentFactory) -> int:
    raw = _overlay(
        _raw(args),
        "sweep",
        args,
        ["dim", "theta_steps", "n_values", "sign_policy", "format", "output_path", "workers"],
    )
    job = config_to_sweep_job(validate_config(raw, SweepJobConfig, args.config or "<arguments>"))
    built = factory.build_sweep(job)
    table, report = built.engine.run(job)
    print(
        f"sweep: dim={table.dim} rows={report.rows_emitted} invalid={report.rows_invalid} "
        f"format={job.fmt} output={job.output_path}"
    )
    return EXIT_OK if report.ok else EXIT_PROPERTY_FAILURE


def cmd_limit(args: argparse.Namespace, factory: ComponentFactory) -> int:
    raw = _overlay(_raw(args), "limit", args, ["d_values", "seed", "format", "output_path", "workers"])
    job = config_to_limit_job(validate_config(raw, LimitJobConfig, args.config or "<arguments>"))
    study = convergence_study(job.d_values, seed=job.seed, workers=job.workers, tol=job.tol)
    factory.sink(job.fmt).write(study, job.output_path)
    if study.skipped_dims:
        print(f"skipped (branch cut): {study.skipped_dims}")
    for summary in decay_summary(study):
        print(summary.format())
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "sweep": cmd_sweep, "limit": cmd_limit}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the uncertainty toolkit."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_config, level=args.log_level)
    factory = ComponentFactory()

    try:
        return COMMANDS[args.command](args, factory)
    except BranchCutError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigLoadError as e:
        print(f"Configuration loading failed: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    except (UncertaintyError, ValueError, KeyError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
