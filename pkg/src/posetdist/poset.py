"""Finite posets over dense integer points and their basic order statistics.

A poset on ``n`` points is stored by its cover relation together with the
strict up-/down-sets of every point as integer bitmasks.  Points are always
``0 .. n-1``; labels are display metadata only.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .errors import BadIndex, CyclicInput


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite poset.

    Build one with :func:`from_cover_pairs` (or ``Poset(n, pairs)``); any
    relation pairs are accepted and reduced to the cover relation.
    """

    __slots__ = ("n", "covers", "labels", "up", "down", "upper_covers",
                 "lower_covers", "topo", "__dict__")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = (),
                 labels: Optional[Sequence[str]] = None):
        pairs = [(int(a), int(b)) for a, b in pairs]
        if n < 0:
            raise BadIndex(f"negative point count {n}")
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise BadIndex(f"pair ({a}, {b}) out of range for n={n}")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise BadIndex(f"{len(labels)} labels for {n} points")

        succ = [set() for _ in range(n)]
        indeg = [0] * n
        for a, b in pairs:
            if a == b:
                raise CyclicInput(f"point {a} is related to itself")
            if b not in succ[a]:
                succ[a].add(b)
                indeg[b] += 1

        # Kahn's algorithm, smallest index first
        ready = sorted(x for x in range(n) if indeg[x] == 0)
        topo = []
        heapq.heapify(ready)
        while ready:
            x = heapq.heappop(ready)
            topo.append(x)
            for y in succ[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(ready, y)
        if len(topo) != n:
            raise CyclicInput("relation pairs contain a cycle")

        up = [0] * n
        for x in reversed(topo):
            m = 0
            for y in succ[x]:
                m |= (1 << y) | up[y]
            up[x] = m
        down = [0] * n
        for x in range(n):
            for y in bits(up[x]):
                down[y] |= 1 << x

        covers = set()
        for a in range(n):
            for b in succ[a]:
                if up[a] & down[b] == 0:
                    covers.add((a, b))

        uc = [[] for _ in range(n)]
        lc = [[] for _ in range(n)]
        for a, b in sorted(covers):
            uc[a].append(b)
            lc[b].append(a)

        self.n = n
        self.covers = frozenset(covers)
        self.labels = labels
        self.up = tuple(up)
        self.down = tuple(down)
        self.upper_covers = tuple(tuple(c) for c in uc)
        self.lower_covers = tuple(tuple(c) for c in lc)
        self.topo = tuple(topo)

    # -- relation queries ------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return x == y or bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return x == y or bool((self.up[x] | self.down[x]) >> y & 1)

    def comparable_mask(self, x: int) -> int:
        """Bitmask of points comparable to ``x``, excluding ``x`` itself."""
        return self.up[x] | self.down[x]

    @cached_property
    def closure(self) -> np.ndarray:
        """Boolean matrix with ``closure[a, b]`` true iff ``a <= b``."""
        m = np.eye(self.n, dtype=bool)
        for a in range(self.n):
            for b in bits(self.up[a]):
                m[a, b] = True
        m.setflags(write=False)
        return m

    def minimal(self) -> list[int]:
        return [x for x in range(self.n) if not self.down[x]]

    def maximal(self) -> list[int]:
        return [x for x in range(self.n) if not self.up[x]]

    @property
    def bottom(self) -> Optional[int]:
        """The unique minimal point, if there is one."""
        m = self.minimal()
        return m[0] if len(m) == 1 else None

    @property
    def top(self) -> Optional[int]:
        m = self.maximal()
        return m[0] if len(m) == 1 else None

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index_of(self, label: str) -> int:
        """Point index carrying ``label``."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def pts(self, *labels: str) -> list[int]:
        return [self.index_of(s) for s in labels]

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        r = [0] * self.n
        for x in self.topo:
            for y in self.upper_covers[x]:
                r[y] = max(r[y], r[x] + 1)
        return tuple(r)

    def rank_levels(self) -> list[list[int]]:
        """Points grouped by rank, each group ascending."""
        if not self.n:
            return []
        levels = [[] for _ in range(max(self.ranks) + 1)]
        for x, r in enumerate(self.ranks):
            levels[r].append(x)
        return levels

    # -- dunder ----------------------------------------------------------

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return (self.n, self.covers, self.labels) == (other.n, other.covers, other.labels)

    def __hash__(self):
        return hash((self.n, self.covers, self.labels))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={sorted(self.covers)})"


def from_cover_pairs(n: int, pairs: Iterable[tuple[int, int]],
                     labels: Optional[Sequence[str]] = None) -> Poset:
    """Build a poset from relation pairs ``(a, b)`` meaning ``a < b``.

    Transitively redundant pairs are dropped; the stored covers are the
    transitive reduction of the input.
    """
    return Poset(n, pairs, labels)


def is_comparable(p: Poset, x: int, y: int) -> bool:
    return p.comparable(x, y)


@dataclass(frozen=True)
class RankData:
    rank: tuple[int, ...]
    is_ranked: Optional[bool]   # None when 0̂ or 1̂ is missing
    height: int
    width: int


def rank_data(p: Poset) -> RankData:
    ranks = p.ranks
    height = max(ranks) + 1 if p.n else 0
    is_ranked = None
    if p.n and p.bottom is not None and p.top is not None:
        # every maximal chain has equal length iff every cover steps rank by one
        is_ranked = all(ranks[b] == ranks[a] + 1 for a, b in p.covers)
    return RankData(ranks, is_ranked, height, len(chain_partition(p)))


def height(p: Poset) -> int:
    return max(p.ranks) + 1 if p.n else 0


def width(p: Poset) -> int:
    return len(chain_partition(p))


def chain_partition(p: Poset) -> list[list[int]]:
    """Partition the points into ``width(p)`` chains, each bottom-to-top.

    Uses a maximum matching in the bipartite graph ``x -> y`` for ``x < y``;
    matched pairs become consecutive chain elements (Fulkerson's reduction
    of Dilworth's theorem).
    """
    n = p.n
    if n == 0:
        return []
    rows, cols = [], []
    for x in range(n):
        for y in bits(p.up[x]):
            rows.append(x)
            cols.append(y)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    succ = maximum_bipartite_matching(graph, perm_type="column")
    has_pred = [False] * n
    for x in range(n):
        if succ[x] >= 0:
            has_pred[succ[x]] = True
    chains = []
    for x in range(n):
        if has_pred[x]:
            continue
        chain = [x]
        while succ[chain[-1]] >= 0:
            chain.append(int(succ[chain[-1]]))
        chains.append(chain)
    return chains


def is_linear_extension(p: Poset, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(p.n)):
        return False
    pos = {x: i for i, x in enumerate(order)}
    return all(pos[a] < pos[b] for a, b in p.covers)


def linear_extensions(p: Poset, limit: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Lazily yield linear extensions in lexicographic order of point indices."""
    n = p.n
    need = [len(p.lower_covers[x]) for x in range(n)]
    order: list[int] = []
    placed = [False] * n
    count = 0

    def rec():
        nonlocal count
        if len(order) == n:
            count += 1
            yield tuple(order)
            return
        for x in range(n):
            if placed[x] or need[x]:
                continue
            placed[x] = True
            order.append(x)
            for y in p.upper_covers[x]:
                need[y] -= 1
            yield from rec()
            for y in p.upper_covers[x]:
                need[y] += 1
            order.pop()
            placed[x] = False
            if limit is not None and count >= limit:
                return

    if limit is not None and limit <= 0:
        return
    yield from rec()


def dual(p: Poset) -> Poset:
    return Poset(p.n, [(b, a) for a, b in p.covers], p.labels)


def induced(p: Poset, points: Iterable[int]) -> tuple[Poset, tuple[int, ...]]:
    """Induced subposet on ``points``; returns it with the map back to ``p``."""
    keep = tuple(sorted(set(points)))
    index = {x: i for i, x in enumerate(keep)}
    pairs = [(index[a], index[b]) for a in keep for b in bits(p.up[a]) if b in index]
    labels = [p.label(x) for x in keep] if p.labels is not None else None
    return Poset(len(keep), pairs, labels), keep


def remove_points(p: Poset, points: Iterable[int]) -> Poset:
    drop = set(points)
    q, _ = induced(p, (x for x in range(p.n) if x not in drop))
    return q


def relabel(p: Poset, labels: Optional[Sequence[str]]) -> Poset:
    return Poset(p.n, p.covers, labels)
