"""Exact integer kernels shared by the rest of the package.

Scalar functions work on Python ints and are exact at any size.  The
vectorised helpers (``square_mask``) use int64/float64 arrays and are only
valid for values below ``VECTOR_LIMIT``; they refuse anything larger.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = [
    "MAX_EDGE",
    "VECTOR_LIMIT",
    "check_edge",
    "gcd",
    "coprime",
    "is_odd",
    "isqrt",
    "exact_sqrt",
    "is_perfect_square",
    "square",
    "square_mask",
]

# Edges and generator parameters are capped here so every squared
# quantity stays below 2**66 (fits the 128-bit budget of fixed-width ports).
MAX_EDGE = 2**32 - 1

# float64 sqrt is correctly rounded and every integer below 2**52 is exact.
VECTOR_LIMIT = 2**52

_SQUARE_RESIDUES_64 = frozenset((k * k) % 64 for k in range(64))
_SQUARE_RESIDUES_63 = frozenset((k * k) % 63 for k in range(63))
_SQUARE_RESIDUES_65 = frozenset((k * k) % 65 for k in range(65))

_RESIDUE_TABLE_64 = np.zeros(64, dtype=bool)
_RESIDUE_TABLE_64[sorted(_SQUARE_RESIDUES_64)] = True


def check_edge(value: int, name: str = "value", limit: int = MAX_EDGE) -> int:
    """Validate that ``value`` is a positive int no larger than ``limit``."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")
    if value > limit:
        raise DomainError(f"{name}={value} exceeds the overflow-safe bound {limit}")
    return value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two non-negative integers.

    >>> gcd(4, 6)
    2
    >>> gcd(0, 5)
    5
    """
    if a < 0 or b < 0:
        raise DomainError(f"gcd expects non-negative arguments, got ({a}, {b})")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def is_odd(n: int) -> bool:
    return n & 1 == 1


def isqrt(n: int) -> int:
    """Floor of the real square root: ``r*r <= n < (r+1)**2``."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def exact_sqrt(n: int) -> int | None:
    """Return ``k`` with ``k*k == n``, or None when ``n`` is not a square.

    A residue filter modulo 64, 63 and 65 rejects most non-squares before
    the integer square root is taken; it never changes the answer.
    """
    if n < 0:
        return None
    if (
        (n & 63) not in _SQUARE_RESIDUES_64
        or n % 63 not in _SQUARE_RESIDUES_63
        or n % 65 not in _SQUARE_RESIDUES_65
    ):
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_perfect_square(n: int) -> bool:
    return exact_sqrt(n) is not None


def square(n: int, limit: int = MAX_EDGE) -> int:
    """Square ``n`` after checking ``|n| <= limit``.

    Python ints never wrap, but callers that promise a fixed-width
    representation go through here so the bound is enforced in one place.
    """
    if abs(n) > limit:
        raise DomainError(f"cannot square {n}: exceeds bound {limit}")
    return n * n


def square_mask(values: np.ndarray) -> np.ndarray:
    """Boolean mask of the perfect squares in a non-negative int64 array.

    Applies the mod-64 residue filter, then confirms candidates by rounding
    the float square root and re-squaring in exact integer arithmetic.
    """
    values = np.asarray(values, dtype=np.int64)
    if values.size and (values.min() < 0 or values.max() >= VECTOR_LIMIT):
        raise DomainError(f"square_mask only handles values in [0, 2**52)")
    mask = _RESIDUE_TABLE_64[values & 63]
    idx = np.flatnonzero(mask)
    if idx.size:
        cand = values[idx]
        roots = np.rint(np.sqrt(cand.astype(np.float64))).astype(np.int64)
        mask[idx] = roots * roots == cand
    return mask
