# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Validation helpers for cohomology computations."""

from __future__ import annotations


def ensure_non_negative(name: str, value: int) -> int:
    """Ensure integer is at least zero."""
    if value < 0:
        message = f"{name} must be >= 0, got {value}"
        raise ValueError(message)
    return value


def ensure_positive_int(name: str, value: int, *, minimum: int = 1, maximum: int | None = None) -> int:
    """Ensure integer is within bounds."""
    if maximum is not None and not minimum <= value <= maximum:
        message = f"{name} must be between {minimum} and {maximum}, got {value}"
        raise ValueError(message)
    if value < minimum:
        message = f"{name} must be >= {minimum}, got {value}"
        raise ValueError(message)
    return value


def ensure_genus(g: int) -> int:
    """Ensure the genus admits a rank-2 odd-degree moduli space."""
    return ensure_positive_int("g", g, minimum=1)


def ensure_odd(name: str, value: int) -> int:
    """Ensure integer is odd."""
    if value % 2 == 0:
        message = f"{name} must be odd, got {value}"
        raise ValueError(message)
    return value


def ensure_rank(r: int) -> int:
    """Ensure rank is supported by the exhaustive rank-2 calculus."""
    ensure_positive_int("r", r, minimum=1)
    if r > 2:  # noqa: PLR2004
        message = "not implemented: rank > 2"
        raise NotImplementedError(message)
    return r
