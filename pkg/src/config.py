# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Run configuration resolved from flags and environment."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Annotated

from pydantic import Field
from pydantic.dataclasses import dataclass

from cohomology.types import CommandName, OutputFormat, Side


CACHE_VERSION = "1"
DEFAULT_CACHE_DIR = ".cache/higgs-betti"
DEFAULT_LOG_LEVEL = "WARNING"
TRUTHY = frozenset({"1", "true", "yes", "on"})


def env_cache_dir() -> Path:
    """Cache directory from HIGGS_BETTI_CACHE_DIR."""
    return Path(os.getenv("HIGGS_BETTI_CACHE_DIR", DEFAULT_CACHE_DIR))


def env_no_cache() -> bool:
    """Whether HIGGS_BETTI_NO_CACHE is set to a truthy value."""
    return os.getenv("HIGGS_BETTI_NO_CACHE", "").strip().lower() in TRUTHY


def env_log_level() -> int:
    """Log level from HIGGS_BETTI_LOG_LEVEL, falling back to WARNING on unknown names."""
    name = os.getenv("HIGGS_BETTI_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING


def log_level_for(verbosity: int) -> int:
    """Each ``--verbose`` lowers the environment level by one step, down to DEBUG."""
    return max(logging.DEBUG, env_log_level() - 10 * verbosity)


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one CLI invocation."""

    command: CommandName
    g: Annotated[int, Field(ge=0)] = 2
    n: Annotated[int, Field(ge=0)] = 0
    d: int = 1
    r: int = 2
    maxdeg: Annotated[int | None, Field(ge=0)] = None
    max_top_degree: int = 3
    maxn: Annotated[int, Field(ge=1)] = 6
    through_degree: Annotated[int, Field(ge=0)] = 6
    side: Side = Side.both
    output_format: OutputFormat = OutputFormat.table
    cache_dir: Path = Field(default_factory=env_cache_dir)
    use_cache: bool = True
    verify_cache: bool = False
    verbosity: Annotated[int, Field(ge=0)] = 0

    def cache_params(self) -> dict[str, object]:
        """Parameters that determine a command's output, used as the cache key."""
        by_command: dict[CommandName, dict[str, object]] = {
            CommandName.betti: {"g": self.g, "n": self.n, "d": self.d, "side": self.side.value, "maxdeg": self.maxdeg},
            CommandName.strata: {"g": self.g, "n": self.n, "r": self.r, "d": self.d, "max": self.max_top_degree},
            CommandName.stabilize: {"g": self.g, "d": self.d, "maxn": self.maxn, "deg": self.through_degree},
            CommandName.dims: {"r": self.r, "g": self.g, "n": self.n},
        }
        return {**by_command[self.command], "format": self.output_format.value}
