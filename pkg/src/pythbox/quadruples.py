"""Integer solutions of x**2 + y**2 + z**2 == t**2.

``quadruple_from_params`` / ``enumerate_quadruples`` use the classical
parametric solution with x, y even; ``brute_force_quadruples`` is an
independent cubic scan used as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .intmath import exact_sqrt, isqrt

# Largest t accepted by the cubic oracle (~0.09 * t**3 inner iterations).
BRUTE_FORCE_MAX_T = 400


@dataclass(frozen=True, slots=True, order=True)
class Quadruple:
    # Field order gives the (t, x, y, z) sort used throughout.
    t: int
    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z, self.t) < 1:
            raise DomainError(f"quadruple entries must be positive: {self}")
        if self.x**2 + self.y**2 + self.z**2 != self.t**2:
            raise DomainError(f"{self.astuple()} does not satisfy x²+y²+z²=t²")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.t)


@dataclass(frozen=True, slots=True)
class QuadrupleParams:
    """Parameters ``(l, m, n)`` with ``n | l**2 + m**2`` and ``n**2 < l**2 + m**2``."""

    l: int  # noqa: E741
    m: int
    n: int

    def __post_init__(self) -> None:
        if min(self.l, self.m, self.n) < 1:
            raise DomainError(f"l, m, n must be positive: {self}")
        s = self.l**2 + self.m**2
        if s % self.n:
            raise DomainError(f"n={self.n} does not divide l²+m²={s}")
        if self.n**2 >= s:
            raise DomainError(f"n={self.n} too large: z=(l²+m²-n²)/n would be <= 0")


def quadruple_from_params(p: QuadrupleParams) -> Quadruple:
    s = p.l**2 + p.m**2
    n2 = p.n * p.n
    return Quadruple(x=2 * p.l, y=2 * p.m, z=(s - n2) // p.n, t=(s + n2) // p.n)


def params_for(x: int, y: int, z: int, t: int) -> QuadrupleParams:
    """The unique parameters reproducing a quadruple with x, y even.

    From the formulas, ``t - z == 2n`` and ``t + z == 2(l**2 + m**2)/n``.
    """
    if x % 2 or y % 2:
        raise DomainError(f"x={x} and y={y} must both be even")
    Quadruple(x=x, y=y, z=z, t=t)
    return QuadrupleParams(x // 2, y // 2, (t - z) // 2)


def enumerate_quadruples(max_t: int) -> list[Quadruple]:
    """Every quadruple with ``t <= max_t`` produced by the parametrisation.

    Ordered edges: both ``(x, y)`` and ``(y, x)`` are emitted when distinct.
    Duplicates from distinct parameters collapse.  Sorted by (t, x, y, z).
    """
    if max_t < 1:
        raise DomainError(f"max_t must be positive, got {max_t}")
    found: set[Quadruple] = set()
    # t > x = 2l and t > y = 2m.
    lim = (max_t - 1) // 2
    for l in range(1, lim + 1):  # noqa: E741
        for m in range(1, lim + 1):
            s = l * l + m * m
            # t = s/n + n >= 2 sqrt(s), so s <= max_t**2 / 4.
            if 4 * s > max_t * max_t:
                break
            for n in range(1, isqrt(s - 1) + 1):
                if s % n:
                    continue
                t = s // n + n
                if t <= max_t:
                    found.add(Quadruple(x=2 * l, y=2 * m, z=s // n - n, t=t))
    return sorted(found)


def brute_force_quadruples(max_t: int) -> list[Quadruple]:
    """Oracle: all solutions with ``x <= y <= z`` and ``t <= max_t``.

    A direct scan over x, y, z; refuses ``max_t > BRUTE_FORCE_MAX_T``.
    """
    if max_t < 1:
        raise DomainError(f"max_t must be positive, got {max_t}")
    if max_t > BRUTE_FORCE_MAX_T:
        raise DomainError(
            f"brute-force scan refused for max_t={max_t} (limit {BRUTE_FORCE_MAX_T})"
        )
    T2 = max_t * max_t
    out = []
    for x in range(1, max_t):
        if 3 * x * x > T2:
            break
        for y in range(x, max_t):
            xy = x * x + y * y
            if xy + y * y > T2:
                break
            for z in range(y, max_t):
                total = xy + z * z
                if total > T2:
                    break
                t = exact_sqrt(total)
                if t is not None:
                    out.append(Quadruple(x=x, y=y, z=z, t=t))
    out.sort()
    return out
