# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Graded-commutative algebra of the universal classes.

The even part is the polynomial ring in α (degree 2), β (degree 4) and
γ (degree 6); the odd part is the exterior algebra on ψ_1..ψ_2g, each of
degree 3. Coefficients are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
import itertools
import logging
from math import comb
from typing import TYPE_CHECKING, Annotated, Protocol

from pydantic import Field
from pydantic.dataclasses import dataclass as pydantic_dataclass

from cohomology.guards import ensure_non_negative, ensure_positive_int
from cohomology.linalg import bareiss_rank, integer_row
from cohomology.types import Parity


if TYPE_CHECKING:
    from collections.abc import Hashable, Iterable, Mapping, Sequence


logger = logging.getLogger(__name__)

ALPHA_DEGREE = 2
BETA_DEGREE = 4
GAMMA_DEGREE = 6
PSI_DEGREE = 3


class InhomogeneousError(ValueError):
    """An element does not live in the requested graded slice."""


class GenusMismatchError(ValueError):
    """Exterior elements over different genera were combined."""


class PrimitiveDimensionMismatch(ArithmeticError):
    """Closed-form and kernel-rank primitive dimensions disagree."""


@pydantic_dataclass(frozen=True)
class GeneratorSpec:
    """A universal class: its name, cohomological degree and parity.

    Curve classes σ, e_j enter only through the Künneth decomposition
    ``c_i = α_i σ + β_i + Σ ψ_{i,j} e_j``, recorded in ``normalization``
    where it applies.
    """

    name: str
    degree: Annotated[int, Field(ge=0)]
    parity: Parity
    normalization: str | None = None

    def __post_init__(self) -> None:
        expected = Parity.odd if self.degree % 2 else Parity.even
        if self.parity is not expected:
            message = f"{self.name} has degree {self.degree} but parity {self.parity}"
            raise ValueError(message)


def _parity(degree: int) -> Parity:
    return Parity.odd if degree % 2 else Parity.even


def universal_generators(g: int, r: int = 2) -> list[GeneratorSpec]:
    """Universal classes ε_j, α_i, β_i, ψ_{i,j} for rank ``r`` over genus ``g``."""
    ensure_non_negative("g", g)
    ensure_positive_int("r", r)
    table = [GeneratorSpec(f"eps_{j}", 1, Parity.odd) for j in range(1, 2 * g + 1)]
    for i in range(2, r + 1):
        table.append(GeneratorSpec(f"alpha_{i}", 2 * i - 2, _parity(2 * i - 2), f"Künneth σ-component of c_{i}"))
        table.append(GeneratorSpec(f"beta_{i}", 2 * i, _parity(2 * i), f"Künneth 1-component of c_{i}"))
        table.extend(
            GeneratorSpec(f"psi_{i},{j}", 2 * i - 1, _parity(2 * i - 1), f"Künneth e_{j}-component of c_{i}")
            for j in range(1, 2 * g + 1)
        )
    return table


def normalized_generators(g: int) -> list[GeneratorSpec]:
    """Rank-2 generators α, β, γ, ψ_j of the Σ-invariant ring."""
    ensure_non_negative("g", g)
    return [
        GeneratorSpec("alpha", ALPHA_DEGREE, Parity.even, "alpha = 1/2 alpha_2"),
        GeneratorSpec("beta", BETA_DEGREE, Parity.even, "beta = -1/4 beta_2"),
        GeneratorSpec("gamma", GAMMA_DEGREE, Parity.even, "gamma = -2 sum_j psi_j psi_{j+g}"),
        *(GeneratorSpec(f"psi_{j}", PSI_DEGREE, Parity.odd, f"psi_{j} = psi_2,{j}") for j in range(1, 2 * g + 1)),
    ]


class GradedElement(Protocol):
    """Anything with a sparse coefficient map over graded basis keys."""

    @property
    def terms(self) -> Mapping[Hashable, Fraction]: ...

    @staticmethod
    def key_degree(key: Hashable) -> int: ...

    @staticmethod
    def key_order(key: Hashable) -> tuple[int, ...]: ...


@dataclass(frozen=True)
class EvenMonomial:
    """α^a β^b γ^c."""

    a: int = 0
    b: int = 0
    c: int = 0

    @property
    def degree(self) -> int:
        return ALPHA_DEGREE * self.a + BETA_DEGREE * self.b + GAMMA_DEGREE * self.c

    def __mul__(self, other: EvenMonomial) -> EvenMonomial:
        return EvenMonomial(self.a + other.a, self.b + other.b, self.c + other.c)

    def sort_key(self) -> tuple[int, ...]:
        """Graded lex with α < β < γ."""
        return (self.degree, self.c, self.b, self.a)


def monomials_of_degree(d: int) -> list[EvenMonomial]:
    """Basis of the degree-``d`` slice of Q[α, β, γ], in graded lex order."""
    if d < 0 or d % 2:
        return []
    half = d // 2
    monomials = [
        EvenMonomial(half - 2 * b - 3 * c, b, c)
        for c in range(half // 3 + 1)
        for b in range((half - 3 * c) // 2 + 1)
    ]
    return sorted(monomials, key=EvenMonomial.sort_key)


@dataclass(frozen=True)
class RingElement:
    """Exact rational combination of even monomials; zero coefficients are never stored."""

    terms: Mapping[EvenMonomial, Fraction] = field(default_factory=dict, hash=False)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[EvenMonomial, Fraction | int]]) -> RingElement:
        acc: dict[EvenMonomial, Fraction] = {}
        for mono, coeff in terms:
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        return cls({mono: coeff for mono, coeff in acc.items() if coeff})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, coeff: Fraction | int = 1) -> RingElement:
        return cls.from_terms([(EvenMonomial(a, b, c), coeff)])

    @classmethod
    def constant(cls, value: Fraction | int) -> RingElement:
        return cls.monomial(coeff=value)

    @staticmethod
    def key_degree(key: EvenMonomial) -> int:
        return key.degree

    @staticmethod
    def key_order(key: EvenMonomial) -> tuple[int, ...]:
        return key.sort_key()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Common degree of a homogeneous element, ``None`` for zero."""
        degrees = {mono.degree for mono in self.terms}
        if len(degrees) > 1:
            message = f"element is not homogeneous: degrees {sorted(degrees)}"
            raise InhomogeneousError(message)
        return degrees.pop() if degrees else None


def even_add(x: RingElement, y: RingElement) -> RingElement:
    """Sum of two even-ring elements."""
    return RingElement.from_terms(itertools.chain(x.terms.items(), y.terms.items()))


def even_mul(x: RingElement, y: RingElement) -> RingElement:
    """Commutative product with exact rational coefficients."""
    return RingElement.from_terms(
        (m1 * m2, c1 * c2) for m1, c1 in x.terms.items() for m2, c2 in y.terms.items()
    )


def even_pow(x: RingElement, k: int) -> RingElement:
    """``x`` to the power ``k``; ``x^0 = 1``."""
    ensure_non_negative("k", k)
    result = RingElement.constant(1)
    for _ in range(k):
        result = even_mul(result, x)
    return result


def _sort_with_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """Sign of the sorting permutation and the sorted indices; ``None`` on a repeat."""
    if len(set(indices)) != len(indices):
        return None
    inversions = sum(1 for i, j in itertools.combinations(range(len(indices)), 2) if indices[i] > indices[j])
    return (-1) ** inversions, tuple(sorted(indices))


@dataclass(frozen=True)
class ExteriorElement:
    """Rational combination of square-free ψ-monomials over genus ``g``.

    Keys are ascending index tuples with the permutation sign folded into the
    coefficient, so equal elements compare equal.
    """

    g: int
    terms: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        for key in self.terms:
            if list(key) != sorted(set(key)) or any(not 1 <= i <= 2 * self.g for i in key):
                message = f"{key} is not a sorted square-free index set in 1..{2 * self.g}"
                raise ValueError(message)

    @classmethod
    def from_terms(cls, g: int, terms: Iterable[tuple[Sequence[int], Fraction | int]]) -> ExteriorElement:
        acc: dict[tuple[int, ...], Fraction] = {}
        for indices, coeff in terms:
            canonical = _sort_with_sign(indices)
            if canonical is None:
                continue
            sign, key = canonical
            acc[key] = acc.get(key, Fraction(0)) + sign * Fraction(coeff)
        return cls(g, {key: coeff for key, coeff in acc.items() if coeff})

    @classmethod
    def psi(cls, g: int, j: int) -> ExteriorElement:
        return cls.from_terms(g, [((j,), 1)])

    @classmethod
    def basis_element(cls, g: int, indices: Sequence[int]) -> ExteriorElement:
        return cls.from_terms(g, [(indices, 1)])

    @classmethod
    def unit(cls, g: int) -> ExteriorElement:
        return cls(g, {(): Fraction(1)})

    @staticmethod
    def key_degree(key: tuple[int, ...]) -> int:
        return PSI_DEGREE * len(key)

    @staticmethod
    def key_order(key: tuple[int, ...]) -> tuple[int, ...]:
        return (len(key), *key)

    @property
    def is_zero(self) -> bool:
        return not self.terms


def _same_genus(x: ExteriorElement, y: ExteriorElement) -> None:
    if x.g != y.g:
        message = f"exterior elements over different genera: {x.g} and {y.g}"
        raise GenusMismatchError(message)


def wedge_mul(x: ExteriorElement, y: ExteriorElement) -> ExteriorElement:
    """Graded-anticommutative product; ψ_i ψ_j = -ψ_j ψ_i since each ψ has odd degree."""
    _same_genus(x, y)
    return ExteriorElement.from_terms(
        x.g,
        ((k1 + k2, c1 * c2) for k1, c1 in x.terms.items() for k2, c2 in y.terms.items()),
    )


def wedge_power(x: ExteriorElement, m: int) -> ExteriorElement:
    """``m``-fold wedge power; the unit for ``m = 0``."""
    ensure_non_negative("m", m)
    result = ExteriorElement.unit(x.g)
    for _ in range(m):
        result = wedge_mul(result, x)
    return result


def gamma_element(g: int) -> ExteriorElement:
    """γ = -2 Σ_{j=1}^{g} ψ_j ψ_{j+g}, of degree 6."""
    ensure_non_negative("g", g)
    return ExteriorElement.from_terms(g, (((j, j + g), -2) for j in range(1, g + 1)))


def exterior_basis(g: int, k: int) -> list[tuple[int, ...]]:
    """Square-free index sets of size ``k`` in 1..2g."""
    return list(itertools.combinations(range(1, 2 * g + 1), k))


def graded_slice_rank(vectors: Sequence[GradedElement], degree: int) -> int:
    """Exact rank of homogeneous elements of one degree in their monomial basis."""
    if not vectors:
        return 0
    support: set[Hashable] = set()
    for vector in vectors:
        for key in vector.terms:
            if vector.key_degree(key) != degree:
                message = f"term {key} has degree {vector.key_degree(key)}, expected {degree}"
                raise InhomogeneousError(message)
            support.add(key)
    basis = sorted(support, key=vectors[0].key_order)
    rows = [integer_row([vector.terms.get(key, Fraction(0)) for key in basis]) for vector in vectors]
    rank = bareiss_rank(rows)
    logger.debug("slice rank %d in degree %d (%d vectors, %d basis monomials)", rank, degree, len(rows), len(basis))
    return rank


@cache
def primitive_dim(g: int, k: int) -> int:
    """Dimension of Λ^k_0, the kernel of wedging Λ^k V with γ^{g+1-k}.

    The kernel is computed by exact elimination and must agree with
    ``C(2g, k) - C(2g, k-2)``.
    """
    ensure_non_negative("g", g)
    ensure_non_negative("k", k)
    if k > g:
        message = f"k must be <= g for primitive parts, got k={k}, g={g}"
        raise ValueError(message)
    closed_form = comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)  # noqa: PLR2004
    power = wedge_power(gamma_element(g), g + 1 - k)
    images = [wedge_mul(ExteriorElement.basis_element(g, key), power) for key in exterior_basis(g, k)]
    kernel = comb(2 * g, k) - graded_slice_rank(images, PSI_DEGREE * (2 * g + 2 - k))
    if kernel != closed_form:
        message = f"primitive dimension mismatch for g={g}, k={k}: kernel {kernel}, closed form {closed_form}"
        raise PrimitiveDimensionMismatch(message)
    return kernel
