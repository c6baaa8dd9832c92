# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Unit tests for relation ideals and the ring-side Poincaré series."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

import pytest

from cohomology.algebra import EvenMonomial
from cohomology.ideal import (
    IdealSpec,
    InadmissibleTripleError,
    admissible_triples,
    dd_rhs_series,
    full_h_series,
    ideal_generators,
    quotient_hilbert,
    rho,
)
from cohomology.series import ONE, euler_characteristic, polynomial


if TYPE_CHECKING:
    from collections.abc import Callable

    from cohomology.series import PoincareSeries


def test_rho_low_degree_relation() -> None:
    relation = rho(IdealSpec(genus=2, summand=0), 1, 1, 0)
    assert relation.terms == {EvenMonomial(1, 1, 0): Fraction(2), EvenMonomial(0, 0, 1): Fraction(2)}
    assert relation.degree == 6


def test_rho_rejects_inadmissible_triple() -> None:
    with pytest.raises(InadmissibleTripleError, match="must exceed"):
        rho(IdealSpec(genus=2, summand=0), 0, 0, 0)


def test_admissible_triples_respect_inequalities() -> None:
    spec = IdealSpec(genus=2, summand=1)
    for r, s, t in admissible_triples(spec, 12):
        assert r + 3 * s + 3 * t > 3 * 2 - 3 + 1
        assert r + 2 * s + 2 * t >= 2 * 2 - 2 + 1
        assert 2 * r + 4 * s + 6 * t <= 12


def test_generators_include_gamma_power() -> None:
    generators = ideal_generators(IdealSpec(genus=0, summand=2), 6)
    assert any(g.terms == {EvenMonomial(0, 0, 1): Fraction(1)} for g in generators)


@pytest.mark.parametrize(
    ("genus", "summand", "expected"),
    [
        (2, 0, (1, 0, 1, 0, 2, 0, 2)),
        (1, 1, (1, 0, 1)),
        (0, 0, ()),
        (1, 0, (1,)),
        (0, 2, ()),
        (0, 3, (1,)),
    ],
)
def test_quotient_hilbert(genus: int, summand: int, expected: tuple[int, ...]) -> None:
    series = quotient_hilbert(IdealSpec(genus=genus, summand=summand), 10)
    assert series.coeffs == expected
    assert series.exact_through == 10


def test_ring_side_genus_one() -> None:
    assert dd_rhs_series(1) == ONE
    assert full_h_series(1) == polynomial(1, 2, 1)


def test_ring_side_genus_two(golden: Callable[[str], PoincareSeries]) -> None:
    series = dd_rhs_series(2)
    assert series.is_polynomial
    assert series == golden("dd_rhs_g2")
    full = full_h_series(2)
    assert full == golden("full_h_g2")
    assert euler_characteristic(full) == 0


def test_ring_side_truncated() -> None:
    series = dd_rhs_series(2, maxdeg=4)
    assert series.exact_through == 4
    assert series.coeffs == (1, 0, 1, 4, 2)


def test_ring_side_genus_three_low_degrees() -> None:
    assert dd_rhs_series(3, maxdeg=6).coeffs == (1, 0, 1, 6, 2, 6, 17)


@pytest.mark.parametrize(("genus", "summand"), [(2, 0), (1, 1), (3, 0)])
def test_quotient_hilbert_is_stable_under_larger_bound(genus: int, summand: int) -> None:
    spec = IdealSpec(genus=genus, summand=summand)
    low, high = quotient_hilbert(spec, 8), quotient_hilbert(spec, 14)
    assert [low.coefficient(d) for d in range(9)] == [high.coefficient(d) for d in range(9)]
