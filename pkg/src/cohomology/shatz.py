# Copyright (c) 2026 Dedalus Labs, Inc. and its contributors
# SPDX-License-Identifier: MIT

"""Harder-Narasimhan types, Shatz polygons and stratum codimensions.

Codimensions and moduli dimensions come from Riemann-Roch on the curve:
χ(V) = deg V + rk V (1 - g), applied to the two terms of each deformation
complex V -> V ⊗ K(n).
"""

from __future__ import annotations

from itertools import pairwise

from pydantic.dataclasses import dataclass

from cohomology.guards import ensure_non_negative, ensure_positive_int, ensure_rank


class MismatchedTypeError(ValueError):
    """Types of different total rank or degree were compared."""


@dataclass(frozen=True)
class HNType:
    """Harder-Narasimhan type ((r_1, d_1), ..., (r_l, d_l)) with strictly decreasing slopes."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.parts:
            message = "an HN type needs at least one part"
            raise ValueError(message)
        for r, _ in self.parts:
            ensure_positive_int("part rank", r)
        for (r1, d1), (r2, d2) in pairwise(self.parts):
            if d1 * r2 <= d2 * r1:
                message = f"slopes must be strictly decreasing: {d1}/{r1} then {d2}/{r2}"
                raise ValueError(message)

    @property
    def rank(self) -> int:
        return sum(r for r, _ in self.parts)

    @property
    def degree(self) -> int:
        return sum(d for _, d in self.parts)

    @property
    def is_semistable(self) -> bool:
        return len(self.parts) == 1

    @property
    def top_degree(self) -> int:
        """Degree of the maximal destabilizing subbundle."""
        return self.parts[0][1]


@dataclass(frozen=True)
class Polygon:
    """Vertices (0, 0), (r_1, d_1), (r_1 + r_2, d_1 + d_2), ..., (r, d)."""

    vertices: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class StratumCodim:
    """Euler-characteristic codimension of a Higgs HN stratum, and its exact value when known."""

    chi_bound: int
    exact: int | None = None


@dataclass(frozen=True)
class ModuliDims:
    """Complex dimensions of H_n and of the fixed-determinant M_n."""

    full: int
    fixed_det: int


@dataclass(frozen=True)
class DeformationEuler:
    """Hypercohomology Euler characteristics of END, END' and END''."""

    end: int
    end_prime: int
    end_double_prime: int


def enum_hn_types(r: int, d: int, max_top_degree: int) -> list[HNType]:
    """The semistable type of (r, d) followed by unstable types with d_1 <= ``max_top_degree``."""
    ensure_rank(r)
    if r == 1:
        return [HNType(((1, d),))]
    unstable = [HNType(((1, d1), (1, d - d1))) for d1 in range(d // 2 + 1, max_top_degree + 1)]
    return [HNType(((2, d),)), *unstable]


def polygon(mu: HNType) -> Polygon:
    """Partial sums of the type, checked to form a convex polygon."""
    vertices = [(0, 0)]
    for r, d in mu.parts:
        x, y = vertices[-1]
        vertices.append((x + r, y + d))
    for (x0, y0), (x1, y1), (x2, y2) in zip(vertices, vertices[1:], vertices[2:], strict=False):
        if (y1 - y0) * (x2 - x1) <= (y2 - y1) * (x1 - x0):
            message = f"slope violation at vertex ({x1}, {y1})"
            raise ValueError(message)
    return Polygon(tuple(vertices))


def _on_or_below(point: tuple[int, int], boundary: tuple[tuple[int, int], ...]) -> bool:
    x, y = point
    for (x0, y0), (x1, y1) in pairwise(boundary):
        if x0 <= x <= x1:
            return (y - y0) * (x1 - x0) <= (y1 - y0) * (x - x0)
    return False


def type_leq(mu: HNType, nu: HNType) -> bool:
    """μ <= ν iff Pol(μ) is contained in Pol(ν)."""
    if (mu.rank, mu.degree) != (nu.rank, nu.degree):
        message = f"cannot compare types of (r, d) = {(mu.rank, mu.degree)} and {(nu.rank, nu.degree)}"
        raise MismatchedTypeError(message)
    upper = polygon(nu).vertices
    return all(_on_or_below(vertex, upper) for vertex in polygon(mu).vertices)


def types_below(nu: HNType) -> list[HNType]:
    """The finite down-set {μ : μ <= ν} among types of the same rank and degree."""
    candidates = enum_hn_types(nu.rank, nu.degree, nu.top_degree)
    return [mu for mu in candidates if type_leq(mu, nu)]


def bundle_euler_characteristic(rank: int, degree: int, g: int) -> int:
    """Riemann-Roch: χ(V) = deg V + rk V (1 - g)."""
    return degree + rank * (1 - g)


def line_bundle_euler_characteristic(degree: int, g: int) -> int:
    return bundle_euler_characteristic(1, degree, g)


def negative_line_bundle_h1(degree: int, g: int) -> int:
    """h^1 of a line bundle of negative degree, where h^0 vanishes."""
    if degree >= 0:
        message = f"degree must be negative for h^0 = 0, got {degree}"
        raise ValueError(message)
    return -line_bundle_euler_characteristic(degree, g)


def complex_euler_characteristic(rank: int, degree: int, g: int, n: int) -> int:
    """χ of the two-term complex V -> V ⊗ K(n): χ(V) - χ(V ⊗ K(n))."""
    twisted = degree + rank * (2 * g - 2 + n)
    return bundle_euler_characteristic(rank, degree, g) - bundle_euler_characteristic(rank, twisted, g)


def _split_parts(mu: HNType) -> tuple[int, int]:
    ensure_rank(mu.rank)
    if mu.is_semistable:
        message = f"semistable type {mu.parts} has no stratum codimension"
        raise ValueError(message)
    (_, d1), (_, d2) = mu.parts
    return d1, d2


def stratum_codim(mu: HNType, g: int, n: int) -> StratumCodim:
    """Codimension of the Higgs stratum of type μ from dim Hyp^1 END''.

    END'' is Hom(L, M) -> Hom(L, M) ⊗ K(n) with L the destabilizing line
    subbundle. Hyp^0 always vanishes; Hyp^2 vanishes once deg Hom(L, M) ⊗ K(n)
    exceeds 2g - 2, i.e. n > d_1 - d_2.
    """
    ensure_positive_int("g", g)
    ensure_non_negative("n", n)
    d1, d2 = _split_parts(mu)
    chi_bound = -complex_euler_characteristic(1, d2 - d1, g, n)
    return StratumCodim(chi_bound=chi_bound, exact=chi_bound if n > d1 - d2 else None)


def bundle_stratum_codim(mu: HNType, g: int) -> int:
    """Codimension d_1 - d_2 + g - 1 of a rank-2 bundle stratum: h^1(Hom(L, M))."""
    ensure_positive_int("g", g)
    d1, d2 = _split_parts(mu)
    return negative_line_bundle_h1(d2 - d1, g)


def deformation_euler(mu: HNType, g: int, n: int) -> DeformationEuler:
    """Euler characteristics of END = END' + END'' for a type of rank <= 2."""
    ensure_non_negative("n", n)
    r = mu.rank
    end = complex_euler_characteristic(r * r, 0, g, n)
    if mu.is_semistable:
        return DeformationEuler(end=end, end_prime=end, end_double_prime=0)
    d1, d2 = _split_parts(mu)
    # End' = End L ⊕ End M ⊕ Hom(M, L); End'' = Hom(L, M)
    end_prime = complex_euler_characteristic(3, d1 - d2, g, n)
    end_double_prime = complex_euler_characteristic(1, d2 - d1, g, n)
    return DeformationEuler(end=end, end_prime=end_prime, end_double_prime=end_double_prime)


def moduli_dims(r: int, g: int, n: int) -> ModuliDims:
    """dim H_n = r^2 (2g - 2 + n) + 2 and dim M_n = (r^2 - 1)(2g - 2 + n)."""
    ensure_positive_int("r", r)
    ensure_non_negative("g", g)
    ensure_non_negative("n", n)
    base = 2 * g - 2 + n
    return ModuliDims(full=r * r * base + 2, fixed_det=(r * r - 1) * base)
