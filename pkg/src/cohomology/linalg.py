# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Fraction-free exact rank over the integers."""

from __future__ import annotations

from fractions import Fraction
import math
from typing import TYPE_CHECKING


if TYPE_CHECKING:
    from collections.abc import Sequence


def integer_row(values: Sequence[Fraction]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    scale = math.lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * scale) for v in values]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss elimination.

    After step ``k`` every live entry is a ``(k+1)``-minor of the input, so the
    division by the previous pivot is exact and entries stay integral.
    """
    matrix = [list(row) for row in rows if any(row)]
    if not matrix:
        return 0
    nrows, ncols = len(matrix), len(matrix[0])
    rank = 0
    previous = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank]
        p = head[col]
        for i in range(rank + 1, nrows):
            row = matrix[i]
            factor = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - factor * head[j]) // previous
            row[col] = 0
        previous = p
        rank += 1
        if rank == nrows:
            break
    return rank
