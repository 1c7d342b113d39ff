"""
Command-line configuration and environment lookups.
"""

import logging
import os
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .permcomb import Permutation

_logger = logging.getLogger(__name__)

WORKERS_ENV = "POLYGROTH_WORKERS"
LOG_LEVEL_ENV = "POLYGROTH_LOG_LEVEL"


def default_workers() -> int:
    """
    Worker count from POLYGROTH_WORKERS, falling back to 1.

    Returns:
        Positive worker count
    """
    raw = os.environ.get(WORKERS_ENV, "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        _logger.warning("ignoring %s=%r: not an integer", WORKERS_ENV, raw)
        return 1
    if value < 1:
        _logger.warning("ignoring %s=%d: must be at least 1", WORKERS_ENV, value)
        return 1
    return value


def default_log_level(verbose: int) -> int:
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    name = os.environ.get(LOG_LEVEL_ENV, "").strip().upper()
    level = logging.getLevelName(name) if name else logging.WARNING
    return level if isinstance(level, int) else logging.WARNING


class CliConfig(BaseModel):
    """Validated options of one polygroth invocation."""

    model_config = ConfigDict(frozen=True)

    command: Literal["compute", "tableaux", "verify", "identities"]
    perm: Optional[str] = None
    n: Optional[int] = Field(None, ge=1)
    method: Literal["divided", "tableau", "grassmannian", "induction"] = "divided"
    format: Literal["text", "json", "latex"] = "text"
    parallel: int = Field(default_factory=default_workers, ge=1)
    seed: int = 0
    trials: int = Field(100, ge=1)
    max_n: int = Field(5, ge=2)
    include_polynomial: bool = False
    verbose: int = Field(0, ge=0)

    @model_validator(mode="after")
    def _required_inputs(self) -> "CliConfig":
        if self.command in ("compute", "tableaux") and not self.perm:
            raise ValueError(f"--perm is required for {self.command}")
        if self.command == "verify" and not self.perm and self.n is None:
            raise ValueError("verify needs --perm or --n")
        return self

    def permutation(self) -> Permutation:
        """
        Parse --perm, embedding it into S_n when a larger --n is given.

        Returns:
            The permutation to work on
        """
        w = Permutation.parse(self.perm or "")
        if self.n is not None and self.n > w.n:
            return w.extend(self.n)
        return w
