"""Enumeration of compositions and of Frobenius (index-0) seaweeds.

The census counts unordered pairs: (a|b) and (b|a) describe isomorphic
seaweeds and are counted once, via their canonical representative.  An
index-0 seaweed always has exactly one full side (sum = n) and one
deficient side, so enumerating (deficient of n-k | full of n) pairs visits
every class exactly once; k = n - sum(deficient side) is the number of
central arcs in the graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .composition import Composition, SeaweedA, SeaweedC, Series, canonical_pair
from .index import index_c

__all__ = [
    "CensusRow",
    "compositions_of",
    "composition_from_mask",
    "seaweed_pairs",
    "frobenius_seaweeds",
    "frobenius_census",
    "explicit_fn1_element",
    "embed_up",
    "hat_map",
    "to_type_a",
]


def composition_from_mask(m: int, mask: int) -> Composition:
    """Composition of m cut at the gaps set in mask (MSB = leftmost gap)."""
    if m == 0:
        if mask:
            raise ValueError("no gaps exist for m = 0")
        return Composition()
    parts: list[int] = []
    run = 1
    for gap in range(m - 1):
        if (mask >> (m - 2 - gap)) & 1:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return Composition(tuple(parts))


def compositions_of(m: int) -> Iterator[Composition]:
    """All 2^(m-1) compositions of m in binary-separator order.

    (m) comes first (mask 0) and (1,...,1) last; m = 0 yields exactly the
    empty composition.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        yield Composition()
        return
    for mask in range(1 << (m - 1)):
        yield composition_from_mask(m, mask)


def seaweed_pairs(n: int, series: Series = Series.SP) -> Iterator[SeaweedC]:
    """All 4^n ordered descriptor pairs at rank n (totals independently <= n)."""
    comps = [c for m in range(n + 1) for c in compositions_of(m)]
    for top in comps:
        for bottom in comps:
            yield SeaweedC(n, top, bottom, series)


@dataclass(frozen=True)
class CensusRow:
    """Row n of the Frobenius count table: by_k[k-1] classes with k central arcs."""

    n: int
    by_k: tuple[int, ...]
    total: int


@lru_cache(maxsize=None)
def _frobenius_by_k(n: int, series: Series) -> tuple[tuple[SeaweedC, ...], ...]:
    groups: list[tuple[SeaweedC, ...]] = []
    for k in range(1, n + 1):
        found = [
            canonical_pair(q)
            for full in compositions_of(n)
            for deficient in compositions_of(n - k)
            if index_c(q := SeaweedC(n, deficient, full, series)) == 0
        ]
        groups.append(tuple(found))
    return tuple(groups)


def clear_census_cache() -> None:
    _frobenius_by_k.cache_clear()


def frobenius_seaweeds(
    n: int, k: int | None = None, series: Series = Series.SP
) -> tuple[SeaweedC, ...]:
    """Canonical index-0 representatives at rank n, optionally only those
    with k central arcs."""
    groups = _frobenius_by_k(n, series)
    if k is None:
        return tuple(itertools.chain.from_iterable(groups))
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    return groups[k - 1]


def frobenius_census(n: int, *, ordered: bool = False, series: Series = Series.SP) -> CensusRow:
    """Count Frobenius classes at rank n, split by central-arc count.

    With ordered=True the raw ordered-pair counts are reported instead;
    every class has exactly two ordered representatives (the sides always
    have different totals), so these are twice the class counts.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    factor = 2 if ordered else 1
    by_k = tuple(factor * len(g) for g in _frobenius_by_k(n, series))
    return CensusRow(n, by_k, sum(by_k))


def explicit_fn1_element(n: int, series: Series = Series.SP) -> SeaweedC:
    """An index-0 seaweed with a single central arc, at every rank n >= 1.

    Built from runs of 2s: (2^k | 1,2^(k-1)) for n = 2k and (2^k | 1,2^k)
    for n = 2k+1 (so n = 1 degenerates to (| 1))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = n // 2
    top = (2,) * k
    bottom = (1,) + (2,) * (k - 1 if n % 2 == 0 else k)
    return SeaweedC(n, Composition(top), Composition(bottom), series)


def _deficient_first(q: SeaweedC) -> SeaweedC:
    """Orient an index-0 descriptor with the deficient side on top."""
    if q.top.total == q.rank and q.bottom.total < q.rank:
        return q.swap()
    if q.bottom.total == q.rank and q.top.total < q.rank:
        return q
    raise ValueError(f"{q} does not have exactly one full side")


def embed_up(q: SeaweedC) -> SeaweedC:
    """Raise an index-0 seaweed one rank: grow the full side by a part 1.

    Graphically this inserts two fresh middle vertices joined by a new
    innermost central arc, turning k central arcs into k+1 while keeping
    the index at 0.  Injective; the side order of the input is kept.
    """
    if index_c(q) != 0:
        raise ValueError(f"embed_up needs an index-0 seaweed, got {q}")
    if q.top.total == q.rank:
        return SeaweedC(
            q.rank + 1, Composition(q.top.parts + (1,)), q.bottom, q.series
        )
    return SeaweedC(
        q.rank + 1, q.top, Composition(q.bottom.parts + (1,)), q.series
    )


def hat_map(q: SeaweedC) -> SeaweedC:
    """Rank-up map on single-central-arc index-0 seaweeds: append 2 to the
    deficient side.

    The central arc moves to the other side of the line.  Injective, and
    onto exactly those rank-(n+1) elements whose full side ends in a 2.
    Returned with the grown (now full) side on top.
    """
    if index_c(q) != 0:
        raise ValueError(f"hat_map needs an index-0 seaweed, got {q}")
    oriented = _deficient_first(q)
    if oriented.rank - oriented.top.total != 1:
        raise ValueError(f"hat_map needs exactly one central arc, got {q}")
    return SeaweedC(
        q.rank + 1, Composition(oriented.top.parts + (2,)), oriented.bottom, q.series
    )


def to_type_a(q: SeaweedC) -> SeaweedA:
    """Transfer an index-0 seaweed with k in {1, 2} central arcs to gl(n).

    The deficient side gains a final part k; the resulting size-n type-A
    graph is a single segment, i.e. the gl index is 1 and the sl index 0.
    """
    if index_c(q) != 0:
        raise ValueError(f"type-A transfer needs an index-0 seaweed, got {q}")
    oriented = _deficient_first(q)
    k = oriented.rank - oriented.top.total
    if k not in (1, 2):
        raise ValueError(
            f"unsupported: the gl(n) transfer exists for 1 or 2 central arcs, got {k}"
        )
    return SeaweedA(Composition(oriented.top.parts + (k,)), oriented.bottom)
