from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import InvalidParameters


def env_int(name: str, default: int) -> int:
    v = os.getenv(name)
    if v is None or v.strip() == "":
        return default
    try:
        return int(v)
    except ValueError as e:
        raise InvalidParameters(f"{name} must be an integer, got {v!r}") from e


def env_bool(name: str, default: bool = False) -> bool:
    v = os.getenv(name)
    if v is None or v.strip() == "":
        return default
    return v.strip().lower() in {"1", "true", "yes", "y", "on"}


def env_float(name: str, default: float) -> float:
    v = os.getenv(name)
    if v is None or v.strip() == "":
        return default
    try:
        return float(v)
    except ValueError as e:
        raise InvalidParameters(f"{name} must be a number, got {v!r}") from e


def env_str(name: str, default: str | None = None) -> str:
    v = os.getenv(name)
    if v is None:
        if default is None:
            raise InvalidParameters(f"Missing env var: {name}")
        return default
    return v


# numeric defaults shared by the library and the CLI
SOLVER_TOL = 1e-10
COMPARE_TOL = 1e-8
EQUITABLE_TOL = 1e-9
ENUMERATION_LIMIT = 64
TOUGHNESS_BUDGET = 26
NAIVE_BUDGET = 20


@dataclass(frozen=True)
class HarnessConfig:
    log_level: str
    log_file: Path | None
    threads: int
    tol: float = COMPARE_TOL
    samples: int = 1000
    seed: int = 0
    toughness_budget: int = TOUGHNESS_BUDGET
    enumeration_limit: int = ENUMERATION_LIMIT
    dedup: bool = True

    def with_overrides(self, **changes: object) -> "HarnessConfig":
        # CLI flags left unset arrive as None
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_config() -> HarnessConfig:
    """Load config from environment. Assumes .env already loaded by the runner."""

    log_file = os.getenv("QTOUGH_LOG_FILE")
    threads = env_int("Q_TOUGH_THREADS", os.cpu_count() or 1)

    return HarnessConfig(
        log_level=env_str("QTOUGH_LOG_LEVEL", os.getenv("LOG_LEVEL", "INFO")),
        log_file=Path(log_file) if log_file else None,
        threads=max(1, threads),
        tol=env_float("QTOUGH_TOL", COMPARE_TOL),
        samples=env_int("QTOUGH_SAMPLES", 1000),
        seed=env_int("QTOUGH_SEED", 0),
        toughness_budget=env_int("QTOUGH_TOUGHNESS_BUDGET", TOUGHNESS_BUDGET),
        # bitset graphs cannot exceed ENUMERATION_LIMIT vertices, so the variable can only lower it
        enumeration_limit=max(1, min(env_int("QTOUGH_ENUMERATION_LIMIT", ENUMERATION_LIMIT), ENUMERATION_LIMIT)),
        dedup=env_bool("QTOUGH_DEDUP", True),
    )
