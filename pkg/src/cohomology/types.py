# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Shared enums and typed command result records."""

from __future__ import annotations

from enum import IntEnum, StrEnum
from typing import Any

from pydantic import Field
from pydantic.dataclasses import dataclass


class Parity(StrEnum):
    """Parity of a cohomological degree."""

    even = "even"
    odd = "odd"


class Side(StrEnum):
    """Which computation of the Betti numbers to run."""

    ring = "ring"
    morse = "morse"
    both = "both"


class OutputFormat(StrEnum):
    """Rendering of command output."""

    table = "table"
    json = "json"
    csv = "csv"


class StratumKind(StrEnum):
    """Shape of a critical submanifold of the circle action."""

    stable_bundles = "stable_bundles"
    jacobian_symmetric = "jacobian_symmetric"


class CommandName(StrEnum):
    """CLI subcommands."""

    betti = "betti"
    strata = "strata"
    stabilize = "stabilize"
    dims = "dims"


class ExitCode(IntEnum):
    """Process exit codes."""

    ok = 0
    usage = 1
    mismatch = 2


@dataclass(frozen=True)
class BettiResult:
    """Ring-side and/or Morse-side Poincaré series of ``H_n``."""

    g: int
    n: int
    d: int
    side: Side
    ring: dict[str, Any] | None = None
    morse: dict[str, Any] | None = None
    match: bool | None = None


@dataclass(frozen=True)
class StrataRow:
    """One Harder-Narasimhan type with its polygon and codimensions."""

    hn_type: list[list[int]]
    polygon: list[list[int]]
    semistable: bool
    chi_bound: int | None = None
    exact_codim: int | None = None
    bundle_codim: int | None = None


@dataclass(frozen=True)
class StabilizeResult:
    """Betti numbers of ``H_n`` for a range of ``n`` against the classifying-space limit."""

    g: int
    d: int
    through_degree: int
    rows: dict[str, list[int]] = Field(default_factory=dict)
    limit: list[int] = Field(default_factory=list)
    stabilized: list[bool] = Field(default_factory=list)
    monotone: bool = True


@dataclass(frozen=True)
class DimsResult:
    """Complex dimensions of the full and fixed-determinant moduli spaces."""

    r: int
    g: int
    n: int
    full: int
    fixed_det: int


@dataclass(frozen=True)
class CommandOutcome:
    """Rendered output of a command and the exit code it maps to."""

    output: str
    exit_code: ExitCode = ExitCode.ok
