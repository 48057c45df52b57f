"""Environment overrides, verification settings and the debug channel."""

from __future__ import annotations

import os
import sys
import warnings
from dataclasses import dataclass, replace

SEED_ENV_VAR = "TORUS_WRT_SEED"
JOBS_ENV_VAR = "TORUS_WRT_JOBS"
DEBUG_ENV_VAR = "TORUS_WRT_DEBUG"

DEFAULT_SEED = 0xC0FFEE
DEFAULT_JOBS = 1

__all__ = [
    "SEED_ENV_VAR",
    "JOBS_ENV_VAR",
    "DEBUG_ENV_VAR",
    "DEFAULT_SEED",
    "DEFAULT_JOBS",
    "VerifySettings",
    "resolve_seed",
    "resolve_jobs",
    "debug_enabled",
]

_TRUTHY = {"1", "true", "yes", "on"}


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw, 0)
    except ValueError:
        warnings.warn(f"Ignoring malformed {name}={raw!r}; using {default}", RuntimeWarning, stacklevel=3)
        return default


def resolve_seed(explicit: int | None = None) -> int:
    """Command-line seed, else ``TORUS_WRT_SEED``, else the fixed default."""

    if explicit is not None:
        return explicit
    return _int_from_env(SEED_ENV_VAR, DEFAULT_SEED)


def resolve_jobs(explicit: int | None = None) -> int:
    jobs = explicit if explicit is not None else _int_from_env(JOBS_ENV_VAR, DEFAULT_JOBS)
    return max(1, jobs)


def debug_enabled() -> bool:
    return os.environ.get(DEBUG_ENV_VAR, "").strip().lower() in _TRUTHY


def _debug(message: str) -> None:
    if debug_enabled():
        print(f"[torus-wrt] {message}", file=sys.stderr)


@dataclass(frozen=True)
class VerifySettings:
    """Parameters shared by the verification suites."""

    seed: int = DEFAULT_SEED
    trials: int = 1000
    kmax: int = 200
    bmax: int = 12

    @classmethod
    def from_environment(cls, **overrides: int | None) -> "VerifySettings":
        settings = cls(seed=resolve_seed())
        explicit = {key: value for key, value in overrides.items() if value is not None}
        return replace(settings, **explicit)
