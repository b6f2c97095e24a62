"""Pythagorean triples: Euclid parametrisation, classification, inversion.

Triples are stored canonically as ``(even leg, odd leg, hypotenuse)`` when
primitive.  Also hosts the parametric solution of X**2 + 2*Y**2 = Z**2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError
from .intmath import exact_sqrt, gcd, isqrt


@dataclass(frozen=True, slots=True)
class Triple:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 1:
            raise DomainError(f"triple components must be positive: {self.astuple()}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise DomainError(f"{self.astuple()} is not Pythagorean")

    def astuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True, slots=True, order=True)
class TripleParams:
    """Euclid parameters: ``M > N >= 1``, coprime, opposite parity."""

    M: int
    N: int

    def __post_init__(self) -> None:
        M, N = self.M, self.N
        if N < 1 or M <= N:
            raise DomainError(f"need M > N >= 1, got M={M}, N={N}")
        if gcd(M, N) != 1:
            raise DomainError(f"M={M} and N={N} share a common factor")
        if (M + N) % 2 == 0:
            raise DomainError(f"M + N must be odd, got M={M}, N={N}")


@dataclass(frozen=True, slots=True)
class TwoSquareParams:
    t1: int
    t2: int
    D: int = 1

    def __post_init__(self) -> None:
        if min(self.t1, self.t2, self.D) < 1:
            raise DomainError(f"t1, t2, D must be positive: {self}")


class TripleStatus(enum.Enum):
    NOT_PYTHAGOREAN = "not_pythagorean"
    PRIMITIVE = "primitive"
    NON_PRIMITIVE = "non_primitive"


class Classification(NamedTuple):
    status: TripleStatus
    g: int | None = None  # gcd of the legs, set for Pythagorean input


def make_primitive_triple(p: TripleParams) -> Triple:
    """``(2MN, M**2 - N**2, M**2 + N**2)`` for admissible Euclid parameters."""
    M, N = p.M, p.N
    return Triple(2 * M * N, M * M - N * N, M * M + N * N)


def classify_triple(a: int, b: int, c: int) -> Classification:
    """Classify legs ``a``, ``b`` (any order) against hypotenuse ``c``."""
    if min(a, b, c) < 1:
        raise DomainError(f"components must be positive, got ({a}, {b}, {c})")
    if a * a + b * b != c * c:
        return Classification(TripleStatus.NOT_PYTHAGOREAN)
    g = gcd(a, b)
    if g == 1:
        return Classification(TripleStatus.PRIMITIVE, 1)
    return Classification(TripleStatus.NON_PRIMITIVE, g)


def canonical_primitive(a: int, b: int, c: int) -> Triple:
    """Reorder a primitive triple's legs as (even, odd, hypotenuse)."""
    status = classify_triple(a, b, c).status
    if status is not TripleStatus.PRIMITIVE:
        raise DomainError(f"({a}, {b}, {c}) is {status.value}, expected primitive")
    if a % 2:
        a, b = b, a
    return Triple(a, b, c)


def decompose_primitive_triple(tr: Triple | tuple[int, int, int]) -> TripleParams:
    """Invert Euclid's formula: recover ``(M, N)`` from a primitive triple.

    Uses ``M**2 = (c + odd)/2`` and ``N**2 = (c - odd)/2``; legs may come
    in either order.
    """
    a, b, c = tr.astuple() if isinstance(tr, Triple) else tr
    even, odd, c = canonical_primitive(a, b, c).astuple()
    M = exact_sqrt((c + odd) // 2)
    N = exact_sqrt((c - odd) // 2)
    # Unreachable for genuine primitive triples, kept as a guard.
    if M is None or N is None or 2 * M * N != even:
        raise DomainError(f"({a}, {b}, {c}) has no Euclid parameters")
    return TripleParams(M, N)


def enumerate_primitive_triples(max_c: int) -> list[tuple[TripleParams, Triple]]:
    """All primitive triples with hypotenuse ``<= max_c``.

    Sorted by (hypotenuse, even leg).  The parameter grid stops at
    ``M <= isqrt(max_c)`` because ``M**2 + N**2 <= max_c``.
    """
    if max_c < 1:
        raise DomainError(f"max_c must be positive, got {max_c}")
    out = []
    for M in range(2, isqrt(max_c) + 1):
        for N in range(1 + (M % 2), M, 2):
            if M * M + N * N > max_c:
                break
            if gcd(M, N) == 1:
                p = TripleParams(M, N)
                out.append((p, make_primitive_triple(p)))
    out.sort(key=lambda item: (item[1].c, item[1].a))
    return out


def make_x2_plus_2y2_solution(p: TwoSquareParams) -> tuple[int, int, int]:
    """Return ``(X, Y, Z)`` with ``X**2 + 2*Y**2 == Z**2``.

    ``X = D|t1**2 - 2 t2**2|``, ``Y = 2 D t1 t2``, ``Z = D(t1**2 + 2 t2**2)``.
    With ``t1`` odd and ``gcd(t1, t2) == 1`` the solution is primitive.
    """
    t1, t2, D = p.t1, p.t2, p.D
    X = D * abs(t1 * t1 - 2 * t2 * t2)
    Y = D * 2 * t1 * t2
    Z = D * (t1 * t1 + 2 * t2 * t2)
    # t1**2 == 2*t2**2 has no integer solution; sqrt(2) is irrational.
    assert X > 0
    assert X * X + 2 * Y * Y == Z * Z
    return X, Y, Z
