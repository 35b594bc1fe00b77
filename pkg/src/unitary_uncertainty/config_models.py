"""
Pydantic models for YAML run configuration.
Validates sweep, limit and verification parameters with clear error messages.
"""

from __future__ import annotations

from typing import Any, Dict, Iterable, List, Literal, Optional, Type, TypeVar

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from unitary_uncertainty.core.models import LimitJob, SignPolicy, SweepJob, VerifyJob
from unitary_uncertainty.core.tolerances import DEFAULT_TOLERANCES, Tolerances

ModelT = TypeVar("ModelT", bound=BaseModel)


class ToleranceConfig(BaseModel):
    """Overrides for the numerical tolerances; unset fields keep their defaults."""

    model_config = ConfigDict(extra="forbid")

    norm_tol: Optional[float] = Field(None, gt=0)
    orth_tol: Optional[float] = Field(None, gt=0)
    unitary_tol: Optional[float] = Field(None, gt=0)
    log_tol: Optional[float] = Field(None, gt=0)
    branch_tol: Optional[float] = Field(None, gt=0)
    eq_tol: Optional[float] = Field(None, gt=0)
    quotient_tol: Optional[float] = Field(None, gt=0)
    degenerate_tol: Optional[float] = Field(None, gt=0)
    zero_amplitude: Optional[float] = Field(None, gt=0)
    relative_floor: Optional[float] = Field(None, gt=0)

    def to_tolerances(self) -> Tolerances:
        return DEFAULT_TOLERANCES.with_overrides(**self.model_dump(exclude_none=True))


def parse_tol_overrides(items: Iterable[str]) -> Dict[str, float]:
    """Parse repeated NAME=VALUE strings into a dict; values are validated later by ToleranceConfig."""
    out: Dict[str, float] = {}
    for item in items:
        name, sep, value = str(item).partition("=")
        if not sep or not name.strip():
            raise ValueError(f"tolerance override must look like NAME=VALUE, got {item!r}")
        try:
            out[name.strip()] = float(value)
        except ValueError as e:
            raise ValueError(f"tolerance override {item!r} has a non-numeric value") from e
    return out


def _check_dims(values: List[int], what: str) -> List[int]:
    if not values:
        raise ValueError(f"{what} cannot be empty")
    bad = [d for d in values if d < 2]
    if bad:
        raise ValueError(f"{what} must all be >= 2, got {bad}")
    return values


class SweepConfig(BaseModel):
    """Configuration for one figure sweep."""

    model_config = ConfigDict(extra="forbid")

    dim: int = Field(..., ge=2, description="Hilbert space dimension d")
    theta_steps: int = Field(201, ge=2, description="Number of grid points over [0, pi/2], endpoints included")
    n_values: List[int] = Field(default_factory=lambda: [1], description="Orders of the hierarchical bounds")
    sign_policy: Literal["best", "plus", "minus"] = Field("best", description="Sign used for hierarchical bounds")
    output_path: Optional[str] = Field(None, description="Output file; defaults to output/sweep_d<dim>.<format>")
    format: Literal["csv", "json"] = Field("csv", description="Output file format")
    workers: int = Field(1, ge=1, le=256, description="Threads used to evaluate grid rows")

    @model_validator(mode="after")
    def validate_n_values(self):
        if not self.n_values:
            raise ValueError("n_values cannot be empty")
        bad = [n for n in self.n_values if not 1 <= n <= self.dim - 1]
        if bad:
            raise ValueError(f"n_values must satisfy 1 <= n <= {self.dim - 1}, got {bad}")
        self.n_values = list(dict.fromkeys(self.n_values))
        if self.output_path is None:
            self.output_path = f"output/sweep_d{self.dim}.{self.format}"
        return self


class LimitConfig(BaseModel):
    """Configuration for the large-d convergence study."""

    model_config = ConfigDict(extra="forbid")

    d_values: List[int] = Field(..., description="Dimensions to study; even ones are skipped")
    seed: int = Field(0, ge=0, description="Seed for the random complement bases")
    output_path: Optional[str] = Field(None, description="Output file; defaults to output/limit.<format>")
    format: Literal["csv", "json"] = Field("csv", description="Output file format")
    workers: int = Field(1, ge=1, le=256)

    @field_validator("d_values")
    @classmethod
    def validate_d_values(cls, v):
        return _check_dims(v, "d_values")

    @model_validator(mode="after")
    def default_output(self):
        if self.output_path is None:
            self.output_path = f"output/limit.{self.format}"
        return self


class VerifyConfig(BaseModel):
    """Configuration for the property verification suite."""

    model_config = ConfigDict(extra="forbid")

    dims: List[int] = Field(default_factory=lambda: [2, 3, 4, 5, 6, 7, 8])
    trials: int = Field(100, ge=1, description="Random instances per check and dimension")
    seed: int = Field(0, ge=0)
    checks: Optional[List[str]] = Field(None, description="Subset of registered checks to run")
    workers: int = Field(1, ge=1, le=256)

    @field_validator("dims")
    @classmethod
    def validate_dims(cls, v):
        return _check_dims(v, "dims")


class SweepJobConfig(BaseModel):
    """Root configuration model for sweep runs."""

    sweep: SweepConfig
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)


class LimitJobConfig(BaseModel):
    """Root configuration model for limit runs."""

    limit: LimitConfig
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)


class VerifyJobConfig(BaseModel):
    """Root configuration model for verification runs."""

    verify: VerifyConfig = Field(default_factory=VerifyConfig)
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)


class ConfigLoadError(ValueError):
    """A run configuration file could not be read."""


def load_raw_config(config_path: str) -> Dict[str, Any]:
    """Read a YAML mapping, turning parse failures into ValueError."""
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f)
    except FileNotFoundError:
        raise FileNotFoundError(f"Configuration file not found: {config_path}")
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid YAML in {config_path}: {e}")
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise ValueError(f"Configuration root in {config_path} must be a mapping")
    return raw


def validate_config(raw: Dict[str, Any], model_cls: Type[ModelT], source: str = "<arguments>") -> ModelT:
    """Validate a raw mapping, flattening field errors into one ValueError."""
    try:
        return model_cls(**raw)
    except ValidationError as e:
        error_messages = []
        for error in e.errors():
            field_path = ".".join(str(loc) for loc in error["loc"])
            error_messages.append(f"  {field_path}: {error['msg']}")

        raise ValueError(f"Configuration validation failed for {source}:\n" + "\n".join(error_messages)) from e


def load_and_validate_config(config_path: str, model_cls: Type[ModelT] = SweepJobConfig) -> ModelT:  # type: ignore[assignment]
    """
    Load and validate a run configuration from a YAML file.

    Raises:
        FileNotFoundError: If config file doesn't exist
        ValueError: If YAML is malformed or the configuration is invalid
    """
    return validate_config(load_raw_config(config_path), model_cls, config_path)


def config_to_sweep_job(config: SweepJobConfig) -> SweepJob:
    cfg = config.sweep
    return SweepJob(
        dim=cfg.dim,
        n_values=tuple(cfg.n_values),
        theta_steps=cfg.theta_steps,
        sign_policy=SignPolicy(cfg.sign_policy),
        output_path=cfg.output_path,
        fmt=cfg.format,
        workers=cfg.workers,
        tol=config.tolerances.to_tolerances(),
    )


def config_to_limit_job(config: LimitJobConfig) -> LimitJob:
    cfg = config.limit
    return LimitJob(
        d_values=tuple(cfg.d_values),
        seed=cfg.seed,
        output_path=cfg.output_path,
        fmt=cfg.format,
        workers=cfg.workers,
        tol=config.tolerances.to_tolerances(),
    )


def config_to_verify_job(config: VerifyJobConfig) -> VerifyJob:
    cfg = config.verify
    return VerifyJob(
        dims=tuple(cfg.dims),
        trials=cfg.trials,
        seed=cfg.seed,
        checks=tuple(cfg.checks) if cfg.checks else None,
        workers=cfg.workers,
        tol=config.tolerances.to_tolerances(),
    )
