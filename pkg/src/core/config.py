"""
Toolkit settings resolved from defaults and the environment
"""
import logging
import os
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Optional, TypeVar

from dotenv import load_dotenv

from src.core.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class ToolkitSettings:
    """Numerical defaults shared by every module"""
    tol: float = 1e-9
    identity_tol: float = 1e-12
    grid_n: int = 64
    refine_iters: int = 50
    r_min: float = 0.05
    r_max: float = 8.0
    r_points: int = 160
    seed: int = 42
    verify_grid_n: int = 16

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> "ToolkitSettings":
        """
        Build settings, letting DEFCONN_* variables override the defaults.

        Args:
            dotenv_path: Optional .env file; the working directory's .env is used otherwise

        Returns:
            The resolved settings
        """
        load_dotenv(dotenv_path, override=False)
        base = cls()
        settings = replace(
            base,
            tol=_read("DEFCONN_TOL", float, base.tol),
            grid_n=_read("DEFCONN_GRID", int, base.grid_n),
            seed=_read("DEFCONN_SEED", int, base.seed),
        )
        if settings.tol <= 0:
            raise ConfigurationError(f"DEFCONN_TOL must be positive, got {settings.tol}")
        if settings.grid_n < 16:
            raise ConfigurationError(f"DEFCONN_GRID must be at least 16, got {settings.grid_n}")
        if settings != base:
            logger.debug("Settings overridden from environment: %s", settings)
        return settings


def _read(name: str, cast: Callable[[str], T], default: T) -> T:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError as exc:
        raise ConfigurationError(f"Cannot parse {name}={raw!r}") from exc


@lru_cache(maxsize=1)
def get_settings() -> ToolkitSettings:
    """Process-wide settings, read once from the environment"""
    return ToolkitSettings.from_env()
