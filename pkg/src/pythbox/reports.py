"""Search reports and range partitioning shared by the exhaustive scans."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any, Optional

# Anything shaped like the builtin ``map``; ``Executor.map`` qualifies.
Mapper = Callable[..., Iterable[Any]]

DEFAULT_CHUNKS = 16


@dataclass(frozen=True)
class SearchReport:
    name: str
    bound: int
    bound_semantics: str
    count: int
    matches: tuple = ()
    exemplar: Optional[Any] = None
    elapsed: float = field(default=0.0, compare=False)
    details: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if (self.exemplar is None) != (self.count == 0):
            raise ValueError("exemplar must be present exactly when count > 0")


def partition_range(lo: int, hi: int, parts: int = DEFAULT_CHUNKS) -> list[tuple[int, int]]:
    """Split ``range(lo, hi)`` into at most ``parts`` contiguous half-open pieces."""
    n = hi - lo
    if n <= 0:
        return []
    parts = max(1, min(parts, n))
    step, extra = divmod(n, parts)
    out = []
    start = lo
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def chunked(items: list, parts: int = DEFAULT_CHUNKS) -> Iterator[list]:
    for a, b in partition_range(0, len(items), parts):
        yield items[a:b]
