# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Shared helpers for command modules: error messages and output rendering."""

from __future__ import annotations

import csv
import io
import json
from typing import TYPE_CHECKING, Any

from pydantic import TypeAdapter, ValidationError
import sympy

from cohomology.series import SERIES_VARIABLE, PoincareSeries


if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


T = sympy.Symbol(SERIES_VARIABLE)


def message_for_error(exc: Exception) -> str:
    """Normalize exception to concise message."""
    if isinstance(exc, ValidationError):
        error = exc.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        return f"{location}: {error['msg']}" if location else error["msg"]
    return str(exc) if str(exc) else exc.__class__.__name__


def series_expr(series: PoincareSeries) -> sympy.Expr:
    """Sympy expression in ``t``, with an order term past the exact range of a truncated series."""
    expr = sympy.Add(*(c * T**i for i, c in enumerate(series.coeffs) if c))
    if series.exact_through is not None:
        expr += sympy.O(T ** (series.exact_through + 1))
    return expr


def render_series(series: PoincareSeries) -> str:
    """Series as a sympy expression string in ascending powers of t."""
    return sympy.sstr(series_expr(series), order="rev-lex")


def render_json(record: object, annotation: Any = None) -> str:
    """Deterministic JSON for a pydantic record, or for ``annotation`` such as a list of records."""
    payload = TypeAdapter(annotation or type(record)).dump_python(record, mode="json")
    return json.dumps(payload, indent=2, sort_keys=True)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Rows as CSV text under ``header``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Left-aligned plain-text table."""
    cells = [[str(value) for value in header], *([str(value) for value in row] for row in rows)]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(value.ljust(width) for value, width in zip(row, widths, strict=True)).rstrip() for row in cells]
    return "\n".join(lines)
