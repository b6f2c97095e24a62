"""Pythagorean boxes: construction, face classification, generators, searches.

A box has edges ``x, y, z`` and squared face diagonals ``s2 = x²+y²``,
``u2 = y²+z²``, ``w2 = x²+z²``.  It is a Pythagorean box (PB) when
``t2 = x²+y²+z²`` is a perfect square.  Irrational diagonals are carried
exactly through their squares.
"""

from __future__ import annotations

import enum
import time
from collections import defaultdict
from dataclasses import dataclass, field
from functools import partial
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .intmath import MAX_EDGE, check_edge, exact_sqrt, gcd, isqrt, square_mask
from .quadruples import brute_force_quadruples
from .reports import Mapper, SearchReport, chunked, partition_range
from .triples import (
    Triple,
    TripleStatus,
    classify_triple,
    decompose_primitive_triple,
    enumerate_primitive_triples,
)


# --- data model ---


@dataclass(frozen=True)
class BoxCandidate:
    x: int
    y: int
    z: int
    s2: int = field(init=False)
    u2: int = field(init=False)
    w2: int = field(init=False)
    t2: int = field(init=False)

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            check_edge(getattr(self, name), name)
        x2, y2, z2 = self.x**2, self.y**2, self.z**2
        object.__setattr__(self, "s2", x2 + y2)
        object.__setattr__(self, "u2", y2 + z2)
        object.__setattr__(self, "w2", x2 + z2)
        object.__setattr__(self, "t2", x2 + y2 + z2)

    @property
    def s(self) -> int | None:
        return exact_sqrt(self.s2)

    @property
    def u(self) -> int | None:
        return exact_sqrt(self.u2)

    @property
    def w(self) -> int | None:
        return exact_sqrt(self.w2)

    @property
    def edges(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class PythagoreanBox(BoxCandidate):
    t: int = 0

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.t < 1 or self.t * self.t != self.t2:
            raise DomainError(
                f"t={self.t} is not the inner diagonal of {self.edges} (t²={self.t2})"
            )

    @property
    def septuple(self) -> tuple[int, int, int, int, int | None, int | None, int | None]:
        return (self.x, self.y, self.z, self.t, self.s, self.u, self.w)

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.t, self.x, self.y, self.z)


class Face(enum.Enum):
    XZ = "xz"
    XY = "xy"
    YZ = "yz"


class FaceStatus(enum.Enum):
    NOT_PR = "not_pr"
    PR = "pr"
    PRIMITIVE_PR = "primitive_pr"


class FaceClass(NamedTuple):
    face: Face
    status: FaceStatus
    diagonal2: int
    diagonal: int | None


@dataclass(frozen=True, order=True)
class Result2Params:
    M1: int
    N1: int
    N2: int
    M2: int

    def __post_init__(self) -> None:
        M1, N1, N2, M2 = self.M1, self.N1, self.N2, self.M2
        if min(M1, N1, N2, M2) < 1:
            raise DomainError(f"parameters must be positive: {self}")
        if M1 <= N1:
            raise DomainError(f"need M1 > N1, got M1={M1}, N1={N1}")
        if gcd(M1, N1) != 1:
            raise DomainError(f"M1={M1} and N1={N1} are not coprime")
        if (M1 + N1) % 2 == 0:
            raise DomainError(f"M1 + N1 must be odd, got {M1 + N1}")
        if M1 * M1 + N1 * N1 + N2 * N2 != M2 * M2:
            raise DomainError(
                f"M1²+N1²+N2² = {M1 * M1 + N1 * N1 + N2 * N2} != M2² = {M2 * M2}"
            )

    @property
    def t(self) -> int:
        return self.M1**2 + self.N1**2 + 2 * self.N2**2

    @property
    def branch(self) -> str:
        return "even" if self.M1 % 2 == 0 else "odd"


@dataclass(frozen=True)
class Result1Witness:
    M1: int
    N1: int
    M2: int
    N2: int
    delta: int

    def __post_init__(self) -> None:
        M1, N1, M2, N2, d = self.M1, self.N1, self.M2, self.N2, self.delta
        if min(M1, N1, M2, N2, d) < 1:
            raise DomainError(f"witness entries must be positive: {self}")
        if d % 2 == 0:
            raise DomainError(f"delta must be odd, got {d}")
        if gcd(M1, N1) != 1 or gcd(M2, N2) != 1:
            raise DomainError(f"parameter pairs must be coprime: {self}")
        if (M1 + N1) % 2 == 0 or (M2 + N2) % 2 == 0:
            raise DomainError(f"parameter pairs must have opposite parity: {self}")
        if not relation_holds(self):
            raise DomainError(f"M1²+N1²+δN2² != δM2² for {self}")


def relation_holds(wt: Result1Witness) -> bool:
    """The δ-form relation ``M1² + N1² + δ·N2² == δ·M2²``."""
    return wt.M1**2 + wt.N1**2 + wt.delta * wt.N2**2 == wt.delta * wt.M2**2


class WytDecomposition(NamedTuple):
    delta: int
    M2: int
    N2: int


# --- construction and classification ---


def make_box(x: int, y: int, z: int) -> BoxCandidate:
    return BoxCandidate(x, y, z)


def as_pythagorean_box(c: BoxCandidate) -> PythagoreanBox | None:
    """Promote a candidate to a PB, or None when ``t2`` is not a square."""
    t = exact_sqrt(c.t2)
    if t is None:
        return None
    return PythagoreanBox(c.x, c.y, c.z, t=t)


def pythagorean_box(x: int, y: int, z: int) -> PythagoreanBox:
    box = as_pythagorean_box(BoxCandidate(x, y, z))
    if box is None:
        raise DomainError(f"{(x, y, z)} is not a Pythagorean box")
    return box


def _face_edges(c: BoxCandidate, face: Face) -> tuple[int, int, int]:
    if face is Face.XZ:
        return c.x, c.z, c.w2
    if face is Face.XY:
        return c.x, c.y, c.s2
    return c.y, c.z, c.u2


def classify_face(c: BoxCandidate, face: Face) -> FaceClass:
    a, b, d2 = _face_edges(c, face)
    d = exact_sqrt(d2)
    if d is None:
        status = FaceStatus.NOT_PR
    elif gcd(a, b) == 1:
        status = FaceStatus.PRIMITIVE_PR
    else:
        status = FaceStatus.PR
    return FaceClass(face, status, d2, d)


def classify_faces(c: BoxCandidate) -> tuple[FaceClass, FaceClass, FaceClass]:
    """Classify the (x, z, w), (x, y, s) and (y, z, u) faces, in that order."""
    return tuple(classify_face(c, f) for f in Face)  # type: ignore[return-value]


# --- generator with a primitive x-z face ---


def box_from_result2(p: Result2Params) -> PythagoreanBox:
    """Build the box ``(2M1N1, 2M2N2, M1²-N1²)`` with ``t = M1²+N1²+2N2²``.

    The x-z face is a primitive PR with diagonal ``w = M1²+N1²``.
    """
    M1, N1, N2, M2 = p.M1, p.N1, p.N2, p.M2
    box = PythagoreanBox(2 * M1 * N1, 2 * M2 * N2, M1 * M1 - N1 * N1, t=p.t)
    if box.w != M1 * M1 + N1 * N1:
        raise AssertionError(f"x-z diagonal mismatch for {p}")
    return box


def result2_params_from_branch(branch: str, l: int, m: int, n: int) -> Result2Params | None:  # noqa: E741
    """Map branch parameters ``(l, m, n)`` to generator input, or None.

    Both branches solve ``M1² + N1² + N2² = M2²`` with ``N2 = 2l`` and
    ``M2 = (l²+m²+n²)/n``; the "even" branch takes ``M1 = 2m`` and
    ``N1 = (l²+m²-n²)/n``, the "odd" branch swaps the roles of M1 and N1.
    Returns None when ``n`` is not admissible or the result fails the
    generator's coprimality, parity or ordering conditions.
    """
    s = l * l + m * m
    if n < 1 or s % n or n * n >= s:
        return None
    q = s // n - n
    M2 = s // n + n
    if branch == "even":
        M1, N1 = 2 * m, q
    elif branch == "odd":
        M1, N1 = q, 2 * m
    else:
        raise DomainError(f"unknown branch {branch!r}")
    if M1 <= N1 or gcd(M1, N1) != 1 or (M1 + N1) % 2 == 0:
        return None
    return Result2Params(M1, N1, 2 * l, M2)


def enumerate_result2_params(max_t: int, branch: str | None = None) -> list[Result2Params]:
    """All generator inputs with ``t = M1²+N1²+2N2² <= max_t``, sorted by t.

    ``branch`` restricts to M1 even ("even") or M1 odd ("odd").
    """
    if max_t < 1:
        raise DomainError(f"max_t must be positive, got {max_t}")
    branches = ("even", "odd") if branch is None else (branch,)
    found: set[Result2Params] = set()
    # t = M2² + N2² with M2 >= 2 sqrt(l²+m²) and N2 = 2l, so 4(l²+m²) < max_t.
    for l in range(1, isqrt(max_t // 4) + 1):  # noqa: E741
        for m in range(1, isqrt(max_t // 4) + 1):
            s = l * l + m * m
            if 4 * s > max_t:
                break
            for n in range(1, isqrt(s - 1) + 1):
                if s % n:
                    continue
                for br in branches:
                    p = result2_params_from_branch(br, l, m, n)
                    if p is not None and p.t <= max_t:
                        found.add(p)
    return sorted(found, key=lambda p: (p.t, p.M1, p.N1, p.N2))


# --- two-primitive-face decomposition ---


def decompose_wyt(w: int, y: int, t: int) -> WytDecomposition:
    """Split the triple ``(w, y, t)`` as δ times a primitive triple.

    Returns ``(δ, M2, N2)`` with ``w = δ(M2²-N2²)``, ``y = 2δM2N2`` and
    ``t = δ(M2²+N2²)``.
    """
    if min(w, y, t) < 1:
        raise DomainError(f"entries must be positive, got ({w}, {y}, {t})")
    if w % 2 == 0 or y % 2:
        raise DomainError(f"need w odd and y even, got w={w}, y={y}")
    if w * w + y * y != t * t:
        raise DomainError(f"w²+y²={w * w + y * y} != t²={t * t}")
    delta = gcd(w, y)
    p = decompose_primitive_triple((y // delta, w // delta, t // delta))
    return WytDecomposition(delta, p.M, p.N)


def decompose_result1(b: PythagoreanBox) -> Result1Witness:
    """Witness for a box whose x-z and y-z faces are both primitive PRs."""
    xz = classify_face(b, Face.XZ)
    yz = classify_face(b, Face.YZ)
    for fc, edges in ((xz, (b.x, b.z)), (yz, (b.y, b.z))):
        if fc.status is not FaceStatus.PRIMITIVE_PR:
            raise DomainError(
                f"{fc.face.name} face {edges} is {fc.status.value} "
                f"(diagonal² = {fc.diagonal2})"
            )
    if b.x % 2 or b.y % 2:
        raise DomainError(f"expected x and y even, got {b.edges}")
    p1 = decompose_primitive_triple((b.x, b.z, xz.diagonal))
    delta, M2, N2 = decompose_wyt(xz.diagonal, b.y, b.t)
    wt = Result1Witness(p1.M, p1.N, M2, N2, delta)
    # Recomputing every edge from the witness guards the chain end to end.
    assert b.x == 2 * wt.M1 * wt.N1
    assert b.z == wt.M1**2 - wt.N1**2
    assert b.y == 2 * delta * M2 * N2
    assert b.t == delta * (M2**2 + N2**2)
    assert b.u2 == (wt.M1**2 - wt.N1**2) ** 2 + (2 * delta * M2 * N2) ** 2
    return wt


# --- square-base verifier ---


def _result3_chunk(edge_bound: int, x_lo: int, x_hi: int) -> dict:
    z = np.arange(1, edge_bound + 1, dtype=np.int64)
    zz = z * z
    square_base = 0
    pr_face = 0
    bad = []
    for x in range(x_lo, x_hi):
        xx = x * x
        pb = square_mask(2 * xx + zz)
        if not pb.any():
            continue
        pr = pb & square_mask(xx + zz)
        square_base += int(pb.sum())
        pr_face += int(pr.sum())
        prim = pr & (np.gcd(z, x) == 1)
        for zv in z[prim].tolist():
            bad.append((x, zv))
    return {"square_base": square_base, "pr_face": pr_face, "bad": bad}


def verify_result3(edge_bound: int, mapper: Mapper = map) -> SearchReport:
    """Scan square-base boxes ``(x, x, z)`` with ``x, z <= edge_bound``.

    Counts the PBs among them whose x-z face is a primitive PR (the
    expected count is zero).  The x-x face never qualifies because
    ``2x²`` is never a square.  ``mapper`` may be ``Executor.map``.
    """
    check_edge(edge_bound, "edge_bound", limit=2**24)
    start = time.perf_counter()
    work = partial(_result3_chunk, edge_bound)
    pieces = partition_range(1, edge_bound + 1)
    parts = list(mapper(work, [a for a, _ in pieces], [b for _, b in pieces]))
    bad = sorted(xz for part in parts for xz in part["bad"])
    matches = tuple(pythagorean_box(x, x, z) for x, z in bad)
    return SearchReport(
        name="result3",
        bound=edge_bound,
        bound_semantics="1 <= x, z <= bound over boxes (x, x, z)",
        count=len(matches),
        matches=matches,
        exemplar=min(matches, key=PythagoreanBox.sort_key) if matches else None,
        elapsed=time.perf_counter() - start,
        details={
            "candidates": edge_bound * edge_bound,
            "square_base_pbs": sum(p["square_base"] for p in parts),
            "pbs_with_pr_face": sum(p["pr_face"] for p in parts),
        },
    )


# --- minimal-t searches ---


def _primitive_faces(x: int, y: int, z: int) -> list[Triple]:
    faces = []
    for a, b in ((x, y), (x, z), (y, z)):
        c = exact_sqrt(a * a + b * b)
        if c is not None and classify_triple(a, b, c).status is TripleStatus.PRIMITIVE:
            faces.append(Triple(*((a, b) if a % 2 == 0 else (b, a)), c))
    return faces


def orient_on_face(edges: tuple[int, int, int], face: Triple) -> PythagoreanBox:
    """Place ``face`` as x-z (x even, z odd) and the leftover edge as y."""
    rest = list(edges)
    rest.remove(face.a)
    rest.remove(face.b)
    return pythagorean_box(face.a, rest[0], face.b)


def search_min_t_one_primitive_pair(max_t: int) -> SearchReport:
    """All PBs with ``t <= max_t`` having at least one primitive PR face pair.

    Runs over the brute-force quadruple oracle, so ``max_t`` is capped at
    its scan limit.  Each box is oriented on its primitive face of least
    hypotenuse.
    """
    check_edge(max_t, "max_t")
    start = time.perf_counter()
    matches = []
    for q in brute_force_quadruples(max_t):
        faces = _primitive_faces(q.x, q.y, q.z)
        if faces:
            best = min(faces, key=lambda f: (f.c, f.a))
            matches.append(orient_on_face((q.x, q.y, q.z), best))
    matches.sort(key=PythagoreanBox.sort_key)
    return SearchReport(
        name="search_min_t_one_primitive_pair",
        bound=max_t,
        bound_semantics="t <= bound",
        count=len(matches),
        matches=tuple(matches),
        exemplar=matches[0] if matches else None,
        elapsed=time.perf_counter() - start,
    )


def _two_pair_chunk(max_t: int, groups: list[tuple[int, list[int]]]) -> list[tuple[int, int, int, int]]:
    T2 = max_t * max_t
    out = []
    for z, legs in groups:
        zz = z * z
        for i, x in enumerate(legs):
            base = zz + x * x
            for y in legs[i + 1:]:
                total = base + y * y
                if total > T2:
                    break
                t = exact_sqrt(total)
                if t is not None:
                    out.append((x, y, z, t))
    return out


def shared_leg_groups(max_c: int) -> list[tuple[int, list[int]]]:
    """Group primitive triples with hypotenuse ``<= max_c`` by shared leg.

    Each entry is ``(leg, sorted partner legs)``; both legs of every triple
    act as the shared one.
    """
    partners: dict[int, list[int]] = defaultdict(list)
    for _, tr in enumerate_primitive_triples(max_c):
        partners[tr.a].append(tr.b)
        partners[tr.b].append(tr.a)
    return [(leg, sorted(partners[leg])) for leg in sorted(partners) if len(partners[leg]) > 1]


def search_min_t_two_primitive_pairs(max_t: int, mapper: Mapper = map) -> SearchReport:
    """PBs with ``t <= max_t`` whose x-z and y-z faces are both primitive PRs.

    Only pairs of primitive triples sharing a leg ``z`` can qualify, so
    the scan walks those pairs and tests ``x²+y²+z²`` for squareness.
    Boxes are reported with ``x < y`` and the shared edge as z.  The
    witness for the minimal exemplar goes in ``details["witness"]``.
    """
    check_edge(max_t, "max_t", limit=min(MAX_EDGE, 10**7))
    start = time.perf_counter()
    groups = shared_leg_groups(max_t - 1) if max_t > 1 else []
    parts = mapper(partial(_two_pair_chunk, max_t), list(chunked(groups)))
    found = sorted((t, x, y, z) for part in parts for x, y, z, t in part)
    matches = tuple(PythagoreanBox(x, y, z, t=t) for t, x, y, z in found)
    details: dict = {"shared_legs_scanned": len(groups)}
    exemplar = matches[0] if matches else None
    if exemplar is not None:
        details["witness"] = decompose_result1(exemplar)
    return SearchReport(
        name="search_min_t_two_primitive_pairs",
        bound=max_t,
        bound_semantics="t <= bound",
        count=len(matches),
        matches=matches,
        exemplar=exemplar,
        elapsed=time.perf_counter() - start,
        details=details,
    )
