"""
Validated run configuration.

Run keys are checked by a pydantic model before any computation; the
potential block goes through the potentials codec. Either failure becomes
a ConfigError naming the offending key.
"""
import os
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Tuple

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, ValidationError, field_validator

from app_config import (
    COMMANDS,
    DEFAULT_GRID_POINTS,
    DEFAULT_H,
    DEFAULT_K,
    DEFAULT_OUTPUT_PATH,
    DEFAULT_SCHEDULE,
    DEFAULT_SWEEP_POINTS,
    DEFAULT_TOL,
    DEFAULT_WINDOW_RADIUS,
    GRID_PADDING,
    PROVENANCE_EXCLUDED_KEYS,
    THREADS_ENV_VAR,
)
from src.errors import ConfigError, PotentialSpecError
from src.potentials.spec import PotentialSpec, potential_bound, potential_from_mapping, potential_to_mapping
from src.specmeasure.config import DENSITY_FLOOR, GAP_CAP
from utils.file_handler import read_config_file

Command = Literal["eigs", "cdf", "spectrum", "gaps", "moments", "crosscheck", "butterfly"]


def _split_list(value):
    if isinstance(value, str):
        return [tok for tok in value.replace(",", " ").split()]
    return value


class RunConfig(BaseModel):
    """Every run key with its default; see docs/input_output_specification.md."""

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    command: Command
    schedule: List[int] = Field(default_factory=lambda: list(DEFAULT_SCHEDULE))
    m_schedule: Optional[List[int]] = None
    n: Optional[int] = Field(default=None, ge=1)
    offset: int = 0
    grid_min: Optional[float] = None
    grid_max: Optional[float] = None
    grid_points: int = Field(default=DEFAULT_GRID_POINTS, ge=2)
    tol: float = Field(default=DEFAULT_TOL, gt=0)
    h: float = Field(default=DEFAULT_H, gt=0)
    density_floor: float = Field(default=DENSITY_FLOOR, gt=0)
    gap_cap: int = Field(default=GAP_CAP, ge=0)
    K: int = Field(default=DEFAULT_K, ge=0, validation_alias=AliasChoices("K", "k"))
    window_radius: int = Field(default=DEFAULT_WINDOW_RADIUS, ge=1)
    offsets: Optional[List[int]] = None
    moment_tol: Optional[float] = Field(default=None, gt=0)
    sweep_min: float = 0.0
    sweep_max: float = 1.0
    sweep_points: int = Field(default=DEFAULT_SWEEP_POINTS, ge=1)
    output_path: str = DEFAULT_OUTPUT_PATH
    threads: Optional[int] = Field(default=None, ge=0)

    @field_validator("schedule", "m_schedule", "offsets", mode="before")
    @classmethod
    def _parse_list(cls, value):
        return _split_list(value)

    @field_validator("schedule")
    @classmethod
    def _check_schedule(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("must list at least one dimension")
        if any(n < 1 for n in value) or any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("must be strictly increasing positive integers")
        return value

    @field_validator("m_schedule")
    @classmethod
    def _check_m_schedule(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is not None and (not value or any(m < 0 for m in value)):
            raise ValueError("must list nonnegative radii")
        return value

    @field_validator("offsets")
    @classmethod
    def _check_offsets(cls, value: Optional[List[int]]) -> Optional[List[int]]:
        if value is not None and not value:
            raise ValueError("must list at least one window centre")
        return value

    def provenance(self) -> List[str]:
        """Sorted `key = value` lines of every result-affecting run key."""
        dumped = self.model_dump()
        lines = []
        for key in sorted(dumped):
            if key in PROVENANCE_EXCLUDED_KEYS:
                continue
            value = dumped[key]
            if isinstance(value, list):
                value = ", ".join(str(v) for v in value)
            elif isinstance(value, float):
                value = f"{value:.17g}"
            lines.append(f"{key} = {value}")
        return lines


def grid_bounds(config: RunConfig, spec: PotentialSpec) -> Tuple[float, float]:
    """Configured grid ends, defaulting to the padded interval [-(B + 2), B + 2]."""
    reach = GRID_PADDING * (potential_bound(spec) + 2.0)
    lo = -reach if config.grid_min is None else config.grid_min
    hi = reach if config.grid_max is None else config.grid_max
    return lo, hi


def _check_relations(config: RunConfig) -> None:
    if config.window_radius <= config.K:
        raise ConfigError("must exceed K", key="window_radius")
    if config.sweep_min > config.sweep_max:
        raise ConfigError("must not exceed sweep_max", key="sweep_min")


def _check_grid(config: RunConfig, spec: PotentialSpec) -> None:
    lo, hi = grid_bounds(config, spec)
    if lo < hi:
        return
    if config.grid_min is not None:
        raise ConfigError(f"must be below the grid upper end {hi:.17g}", key="grid_min")
    raise ConfigError(f"must be above the grid lower end {lo:.17g}", key="grid_max")


def _key_from_error(error: ValidationError) -> str:
    first = error.errors()[0]
    loc = [str(part) for part in first.get("loc", ()) if not isinstance(part, int)]
    return ".".join(loc) if loc else "config"


def _message_from_error(error: ValidationError) -> str:
    return error.errors()[0].get("msg", str(error))


def _apply_overrides(run: Dict[str, str], potential: Dict[str, str],
                     overrides: Sequence[str]) -> None:
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not key=value", key="--set")
        key, value = (part.strip() for part in item.split("=", 1))
        key = key.lower()
        if key.startswith("potential."):
            potential[key[len("potential."):]] = value
        else:
            run[key] = value


def resolve_threads(config: RunConfig, environ: Mapping[str, str] = os.environ) -> int:
    """
    threads key, else the environment variable, else every core.

    Returns:
        joblib-style worker count (-1 for all cores).
    """
    threads = config.threads
    if threads is None and environ.get(THREADS_ENV_VAR):
        raw = environ[THREADS_ENV_VAR]
        try:
            threads = int(raw)
        except ValueError:
            raise ConfigError(f"{THREADS_ENV_VAR}={raw!r} is not an integer", key="threads")
        if threads < 0:
            raise ConfigError(f"{THREADS_ENV_VAR} must be >= 0", key="threads")
    return -1 if not threads else threads


def build_run_config(command: str, run: Mapping[str, str], potential: Mapping[str, str],
                     overrides: Sequence[str] = ()) -> Tuple[RunConfig, PotentialSpec]:
    """
    Validate run keys and the potential block.

    Raises:
        ConfigError: naming the first offending key.
    """
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}; choose from {', '.join(COMMANDS)}",
                          key="command")
    run, potential = dict(run), dict(potential)
    _apply_overrides(run, potential, overrides)
    run["command"] = command

    try:
        config = RunConfig.model_validate(run)
    except ValidationError as e:
        raise ConfigError(_message_from_error(e), key=_key_from_error(e)) from e
    _check_relations(config)

    if not potential:
        raise ConfigError("missing [potential] section", key="potential")
    try:
        spec = potential_from_mapping(potential)
    except PotentialSpecError as e:
        raise ConfigError(str(e), key=f"potential.{e.key}" if e.key else "potential") from e
    _check_grid(config, spec)
    return config, spec


def load_run_config(command: str, config_path: Optional[str] = None,
                    overrides: Sequence[str] = ()) -> Tuple[RunConfig, PotentialSpec]:
    """Read an optional config file, apply `--set` overrides and validate."""
    run, potential = read_config_file(config_path) if config_path else ({}, {})
    return build_run_config(command, run, potential, overrides)


def potential_provenance(spec: PotentialSpec) -> List[str]:
    return [f"potential.{key} = {value}" for key, value in sorted(potential_to_mapping(spec).items())]
