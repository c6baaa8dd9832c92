# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Exact integer Poincaré series in one formal variable ``t``.

A series is either an exact polynomial (``exact_through is None``) or a
truncated power series whose coefficients are known only through
``exact_through``. Operations propagate the truncation and refuse to read
coefficients past it.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any

from pydantic import Field
from pydantic.dataclasses import dataclass

from cohomology.guards import ensure_non_negative, ensure_positive_int


if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


SERIES_VARIABLE = "t"


class TruncationError(ValueError):
    """A coefficient was requested beyond the exact range of a series."""


class NonVanishingError(ArithmeticError):
    """A series expected to vanish above some degree does not."""


@dataclass(frozen=True)
class PoincareSeries:
    """Integer polynomial or truncated power series in ``t``.

    ``coeffs[i]`` is the coefficient of ``t**i``. Trailing zeros and
    coefficients above ``exact_through`` are normalized away on construction.
    """

    coeffs: tuple[int, ...] = ()
    exact_through: int | None = Field(default=None, ge=0)

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        if self.exact_through is not None:
            del coeffs[self.exact_through + 1 :]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def is_polynomial(self) -> bool:
        """True when the series is an exact polynomial."""
        return self.exact_through is None

    @property
    def degree(self) -> int:
        """Highest degree with a known nonzero coefficient, -1 for zero."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        """Coefficient of ``t**i``."""
        ensure_non_negative("degree", i)
        if self.exact_through is not None and i > self.exact_through:
            message = f"coefficient of t^{i} requested but series is exact only through t^{self.exact_through}"
            raise TruncationError(message)
        return self.coeffs[i] if i < len(self.coeffs) else 0


ZERO = PoincareSeries()
ONE = PoincareSeries((1,))


def polynomial(*coeffs: int) -> PoincareSeries:
    """Build an exact polynomial from ascending coefficients."""
    return PoincareSeries(tuple(coeffs))


def monomial(k: int, coeff: int = 1) -> PoincareSeries:
    """Return ``coeff * t**k``."""
    ensure_non_negative("k", k)
    return PoincareSeries((0,) * k + (coeff,))


def _bound(series: PoincareSeries) -> float:
    """Exactness bound as a float; infinity for a polynomial."""
    return math.inf if series.exact_through is None else series.exact_through


def _valuation(series: PoincareSeries) -> float:
    """Lowest degree that may carry a nonzero coefficient."""
    for i, c in enumerate(series.coeffs):
        if c:
            return i
    return _bound(series) + 1


def _from_bound(coeffs: Sequence[int], bound: float) -> PoincareSeries:
    exact_through = None if bound == math.inf else int(bound)
    return PoincareSeries(tuple(coeffs), exact_through=exact_through)


def series_add(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    """Coefficientwise sum; the result is exact through the smaller bound."""
    size = max(len(a.coeffs), len(b.coeffs))
    coeffs = [
        (a.coeffs[i] if i < len(a.coeffs) else 0) + (b.coeffs[i] if i < len(b.coeffs) else 0)
        for i in range(size)
    ]
    return _from_bound(coeffs, min(_bound(a), _bound(b)))


def series_sub(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    """Coefficientwise difference ``a - b``."""
    return series_add(a, series_scale(b, -1))


def series_scale(a: PoincareSeries, factor: int) -> PoincareSeries:
    """Every coefficient multiplied by ``factor``."""
    return PoincareSeries(tuple(factor * c for c in a.coeffs), exact_through=a.exact_through)


def series_sum(terms: Iterable[PoincareSeries]) -> PoincareSeries:
    """Sum of ``terms``, exact only as far as every summand is."""
    total = ZERO
    for term in terms:
        total = series_add(total, term)
    return total


def series_mul(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    """Convolution product.

    Coefficient ``k`` of the product needs ``a`` through ``k - val(b)`` and
    ``b`` through ``k - val(a)``, which fixes the exact range of the result.
    """
    bound = min(_bound(a) + _valuation(b), _bound(b) + _valuation(a))
    if not a.coeffs or not b.coeffs:
        return _from_bound((), bound)
    size = len(a.coeffs) + len(b.coeffs) - 1
    if bound != math.inf:
        size = min(size, int(bound) + 1)
    coeffs = [0] * size
    for i, x in enumerate(a.coeffs):
        if not x or i >= size:
            continue
        for j, y in enumerate(b.coeffs[: size - i]):
            coeffs[i + j] += x * y
    return _from_bound(coeffs, bound)


def series_pow(a: PoincareSeries, k: int) -> PoincareSeries:
    """Raise to a nonnegative power by repeated squaring."""
    ensure_non_negative("k", k)
    result = ONE
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_shift(a: PoincareSeries, k: int) -> PoincareSeries:
    """Multiply by ``t**k``."""
    return series_mul(monomial(k), a)


def expand_rational(numerator: PoincareSeries, denom_factors: Sequence[int], trunc_n: int) -> PoincareSeries:
    """Expand ``numerator / prod(1 - t**a)`` exactly through degree ``trunc_n``."""
    ensure_non_negative("trunc_n", trunc_n)
    for a in denom_factors:
        ensure_positive_int("denominator exponent", a)
    bound = int(min(trunc_n, _bound(numerator)))
    coeffs = list(numerator.coeffs[: bound + 1])
    coeffs.extend([0] * (bound + 1 - len(coeffs)))
    for a in denom_factors:
        for i in range(a, bound + 1):
            coeffs[i] += coeffs[i - a]
    return PoincareSeries(tuple(coeffs), exact_through=bound)


def series_div(a: PoincareSeries, b: PoincareSeries, trunc_n: int) -> PoincareSeries:
    """Power-series quotient ``a / b`` through ``trunc_n``; ``b`` must have constant term ±1."""
    ensure_non_negative("trunc_n", trunc_n)
    lead = b.coefficient(0) if b.coeffs else 0
    if lead not in (1, -1):
        message = f"divisor needs constant term ±1 for an integer quotient, got {lead}"
        raise ArithmeticError(message)
    bound = int(min(trunc_n, _bound(a), _bound(b)))
    quotient: list[int] = []
    for k in range(bound + 1):
        acc = a.coeffs[k] if k < len(a.coeffs) else 0
        for i in range(1, min(k, len(b.coeffs) - 1) + 1):
            acc -= b.coeffs[i] * quotient[k - i]
        quotient.append(acc * lead)
    return PoincareSeries(tuple(quotient), exact_through=bound)


def coeffwise_leq(a: PoincareSeries, b: PoincareSeries, through_degree: int) -> bool:
    """Whether every coefficient of ``a`` is at most that of ``b`` through a degree."""
    return all(a.coefficient(i) <= b.coefficient(i) for i in range(through_degree + 1))


def _require_polynomial(series: PoincareSeries, operation: str) -> None:
    if not series.is_polynomial:
        message = f"{operation} needs an exact polynomial, series is exact only through t^{series.exact_through}"
        raise TruncationError(message)


def euler_characteristic(series: PoincareSeries) -> int:
    """Alternating coefficient sum, the value at ``t = -1``."""
    _require_polynomial(series, "euler_characteristic")
    return sum(c if i % 2 == 0 else -c for i, c in enumerate(series.coeffs))


def is_palindromic(series: PoincareSeries, degree: int) -> bool:
    """Whether ``t**degree * P(1/t) == P(t)``."""
    _require_polynomial(series, "is_palindromic")
    if series.degree > degree:
        return False
    padded = [series.coefficient(i) for i in range(degree + 1)]
    return padded == padded[::-1]


def to_polynomial(series: PoincareSeries, max_degree: int) -> PoincareSeries:
    """Drop the truncation after checking every known coefficient above ``max_degree`` is zero."""
    if series.exact_through is not None and series.exact_through < max_degree:
        message = f"series is exact only through t^{series.exact_through}, cannot certify a polynomial of degree {max_degree}"
        raise TruncationError(message)
    for i in range(max_degree + 1, len(series.coeffs)):
        if series.coeffs[i]:
            message = f"coefficient of t^{i} is {series.coeffs[i]}, expected zero above degree {max_degree}"
            raise NonVanishingError(message)
    return PoincareSeries(series.coeffs[: max_degree + 1])


def series_to_json(series: PoincareSeries) -> dict[str, Any]:
    """Encode with decimal-string coefficients."""
    return {
        "var": SERIES_VARIABLE,
        "coeffs": [str(c) for c in series.coeffs],
        "exact_through": series.exact_through,
    }


def series_from_json(payload: dict[str, Any]) -> PoincareSeries:
    """Decode the JSON encoding produced by ``series_to_json``."""
    if payload.get("var") != SERIES_VARIABLE:
        message = f"series variable must be {SERIES_VARIABLE!r}, got {payload.get('var')!r}"
        raise ValueError(message)
    raw = payload.get("coeffs")
    if not isinstance(raw, list):
        message = "series coeffs must be a list of decimal strings"
        raise TypeError(message)
    return PoincareSeries(tuple(int(c) for c in raw), exact_through=payload.get("exact_through"))


def require_betti(series: PoincareSeries, label: str) -> PoincareSeries:
    """Return ``series`` after checking every known coefficient is a Betti number."""
    negative = [(i, c) for i, c in enumerate(series.coeffs) if c < 0]
    if negative:
        i, c = negative[0]
        message = f"{label}: coefficient of t^{i} is {c}, Betti numbers are >= 0"
        raise ArithmeticError(message)
    return series
