"""Pairs of squares whose sum and difference are both squares.

No such pair exists.  This module checks candidate pairs, performs the
descent step that maps a (hypothetical) coprime pair ``(r, v)`` to a
strictly smaller pair ``(c, f)``, validates the resulting certificate link
by link, and scans ranges exhaustively.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import partial

import numpy as np

from .errors import DomainError
from .intmath import check_edge, exact_sqrt, gcd, square_mask
from .reports import Mapper, SearchReport, partition_range
from .triples import TripleStatus, classify_triple, decompose_primitive_triple


@dataclass(frozen=True, slots=True)
class SquarePair:
    r: int
    v: int

    def __post_init__(self) -> None:
        if not (self.r > self.v >= 1):
            raise DomainError(f"need r > v >= 1, got r={self.r}, v={self.v}")


@dataclass(frozen=True, slots=True)
class DescentCertificate:
    r0: int
    v0: int
    beta: int
    gamma: int
    k1: int
    k2: int
    a: int
    b: int
    c: int
    f: int
    # Which half of (gamma -+ beta)/2 carries the even part 2*k1*k2.
    even_half: str = "sum"


def check_sum_diff_squares(p: SquarePair) -> bool:
    """True iff both ``r² - v²`` and ``r² + v²`` are perfect squares."""
    rr, vv = p.r * p.r, p.v * p.v
    return exact_sqrt(rr - vv) is not None and exact_sqrt(rr + vv) is not None


def _split_two_square_sum(r0: int, beta: int, gamma: int) -> tuple[int, int, str]:
    if min(r0, beta, gamma) < 1:
        raise DomainError(f"r0, beta, gamma must be positive: ({r0}, {beta}, {gamma})")
    if beta % 2 == 0 or gamma % 2 == 0:
        raise DomainError(f"beta={beta} and gamma={gamma} must both be odd")
    if beta >= gamma:
        raise DomainError(f"need beta < gamma, got beta={beta}, gamma={gamma}")
    if gcd(beta, gamma) != 1:
        raise DomainError(f"beta={beta} and gamma={gamma} are not coprime")
    if 2 * r0 * r0 != beta * beta + gamma * gamma:
        raise DomainError(f"2r0² = {2 * r0 * r0} != beta² + gamma² = {beta**2 + gamma**2}")
    lo, hi = (gamma - beta) // 2, (gamma + beta) // 2
    if classify_triple(lo, hi, r0).status is not TripleStatus.PRIMITIVE:
        raise DomainError(f"({lo}, {hi}, {r0}) is not a primitive triple")
    p = decompose_primitive_triple((lo, hi, r0))
    return p.M, p.N, ("difference" if lo % 2 == 0 else "sum")


def parametrize_two_square_sum(r0: int, beta: int, gamma: int) -> tuple[int, int]:
    """Write ``r0 = k1² + k2²`` from ``2r0² = beta² + gamma²``.

    The triple ``((gamma-beta)/2, (gamma+beta)/2, r0)`` is primitive, so its
    legs are ``2k1k2`` and ``k1² - k2²`` in some order.  Consequently
    ``gamma² - beta² == 8(k1-k2)(k1+k2)k1k2``.
    """
    k1, k2, _ = _split_two_square_sum(r0, beta, gamma)
    return k1, k2


def certificate_violations(cert: DescentCertificate) -> list[str]:
    """Names of every certificate invariant that fails (empty when valid)."""
    r0, v0, be, ga = cert.r0, cert.v0, cert.beta, cert.gamma
    k1, k2, a, b, c, f = cert.k1, cert.k2, cert.a, cert.b, cert.c, cert.f
    checks = {
        "difference_square": r0 * r0 - v0 * v0 == be * be,
        "sum_square": r0 * r0 + v0 * v0 == ga * ga,
        "double_r0_square": 2 * r0 * r0 == be * be + ga * ga,
        "v0_square_product": v0 * v0 == 4 * (k1 - k2) * (k1 + k2) * k1 * k2,
        "k1_minus_k2": k1 - k2 == a * a,
        "k1_plus_k2": k1 + k2 == b * b,
        "k1_square": k1 == c * c,
        "k2_square": k2 == f * f,
        "descent_weak": c * c + f * f < r0 * r0 + v0 * v0,
        "descent_strong": c * c + f * f < v0 * v0,
    }
    return [name for name, ok in checks.items() if not ok]


def validate_certificate(cert: DescentCertificate) -> DescentCertificate:
    bad = certificate_violations(cert)
    if bad == ["descent_strong"]:
        raise DomainError(f"certificate only satisfies the weak descent inequality: {cert}")
    if bad:
        raise DomainError(f"certificate violates {', '.join(bad)}: {cert}")
    return cert


def descent_step(p: SquarePair) -> DescentCertificate:
    """Produce the smaller pair ``(c, f)`` from a coprime pair in the set.

    For every real input this raises, since the set is empty; the checks
    are still executed in the order the argument uses them.
    """
    r0, v0 = p.r, p.v
    if gcd(r0, v0) != 1:
        raise DomainError(f"pair ({r0}, {v0}) is not coprime")
    beta = exact_sqrt(r0 * r0 - v0 * v0)
    gamma = exact_sqrt(r0 * r0 + v0 * v0)
    if beta is None or gamma is None:
        raise DomainError(f"({r0}, {v0}): r²-v² and r²+v² are not both squares")
    k1, k2, half = _split_two_square_sum(r0, beta, gamma)
    roots = [exact_sqrt(k) for k in (k1 - k2, k1 + k2, k1, k2)]
    if any(x is None for x in roots):
        raise DomainError(f"k1 - k2, k1 + k2, k1, k2 are not all squares for ({r0}, {v0})")
    a, b, c, f = roots
    return validate_certificate(DescentCertificate(r0, v0, beta, gamma, k1, k2, a, b, c, f, half))


def _lemma1_chunk(r_lo: int, r_hi: int) -> dict:
    diff_sq = sum_sq = 0
    hits = []
    for r in range(max(r_lo, 2), r_hi):
        v = np.arange(1, r, dtype=np.int64)
        rr = r * r
        vv = v * v
        d = square_mask(rr - vv)
        s = square_mask(rr + vv)
        diff_sq += int(d.sum())
        sum_sq += int(s.sum())
        both = d & s
        if both.any():
            hits.extend((r, int(x)) for x in v[both])
    return {"diff": diff_sq, "sum": sum_sq, "hits": hits}


def verify_lemma1(bound: int, mapper: Mapper = map) -> SearchReport:
    """Check every pair ``1 <= v < r <= bound``; the expected count is zero.

    ``details`` records how many pairs pass each half of the test on its own.
    """
    check_edge(bound, "bound", limit=2**24)
    start = time.perf_counter()
    pieces = _balanced_pieces(bound)
    parts = list(mapper(_lemma1_chunk, [a for a, _ in pieces], [b for _, b in pieces]))
    hits = sorted(h for part in parts for h in part["hits"])
    return SearchReport(
        name="lemma1",
        bound=bound,
        bound_semantics="1 <= v < r <= bound",
        count=len(hits),
        matches=tuple(SquarePair(r, v) for r, v in hits),
        exemplar=SquarePair(*hits[0]) if hits else None,
        elapsed=time.perf_counter() - start,
        details={
            "pairs": bound * (bound - 1) // 2,
            "difference_square_pairs": sum(p["diff"] for p in parts),
            "sum_square_pairs": sum(p["sum"] for p in parts),
        },
    )


def _balanced_pieces(bound: int) -> list[tuple[int, int]]:
    # Work per r grows linearly, so cut at equal areas under r.
    n = len(partition_range(1, bound + 1))
    if n == 0:
        return []
    cuts = sorted({1, bound + 1, *(int(bound * (i / n) ** 0.5) + 1 for i in range(1, n))})
    return list(zip(cuts, cuts[1:]))
