"""Meets, joins, join-irreducibles and the Birkhoff downset-lattice machinery."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import reduce
from typing import Optional

import numpy as np

from .errors import NotALattice, TooLarge
from .poset import Poset, bits, induced

DEFAULT_SIZE_CAP = 1 << 20
TRIPLE_CHECK_LIMIT = 64


def size_cap() -> int:
    """Downset-lattice size cap, overridable with ``POSETDIST_SIZE_CAP``."""
    env = os.environ.get("POSETDIST_SIZE_CAP")
    return int(env) if env else DEFAULT_SIZE_CAP


@dataclass(frozen=True)
class MeetJoinTables:
    """Partial meet/join tables; ``-1`` marks a missing meet or join."""
    meet: np.ndarray
    join: np.ndarray
    is_lattice: bool
    is_distributive: bool


def _extremal_bound(p: Poset, common: int, greatest: bool) -> int:
    if not common:
        return -1
    if greatest:
        best = [z for z in bits(common) if not p.up[z] & common]
    else:
        best = [z for z in bits(common) if not p.down[z] & common]
    return best[0] if len(best) == 1 else -1


def _tables(p: Poset) -> tuple[np.ndarray, np.ndarray]:
    n = p.n
    meet = np.full((n, n), -1, dtype=np.int64)
    join = np.full((n, n), -1, dtype=np.int64)
    for x in range(n):
        dx = p.down[x] | 1 << x
        ux = p.up[x] | 1 << x
        for y in range(x, n):
            m = _extremal_bound(p, dx & (p.down[y] | 1 << y), greatest=True)
            j = _extremal_bound(p, ux & (p.up[y] | 1 << y), greatest=False)
            meet[x, y] = meet[y, x] = m
            join[x, y] = join[y, x] = j
    return meet, join


def distributive_by_triples(meet: np.ndarray, join: np.ndarray) -> bool:
    """Check both distributive laws on every triple of a full lattice."""
    n = meet.shape[0]
    if n == 0:
        return True
    z = np.arange(n)
    # (x ^ y) v z == (x v z) ^ (y v z)
    lhs = join[meet[:, :, None], z[None, None, :]]
    rhs = meet[join[:, None, :], join[None, :, :]]
    if not np.array_equal(lhs, rhs):
        return False
    # (x v y) ^ z == (x ^ z) v (y ^ z)
    lhs = meet[join[:, :, None], z[None, None, :]]
    rhs = join[meet[:, None, :], meet[None, :, :]]
    return bool(np.array_equal(lhs, rhs))


def meet_join(p: Poset) -> MeetJoinTables:
    meet, join = _tables(p)
    is_lattice = p.n > 0 and bool((meet >= 0).all() and (join >= 0).all())
    is_distributive = False
    if is_lattice:
        if p.n <= TRIPLE_CHECK_LIMIT:
            is_distributive = distributive_by_triples(meet, join)
        else:
            is_distributive = _birkhoff_map(p, join) is not None
    meet.setflags(write=False)
    join.setflags(write=False)
    return MeetJoinTables(meet, join, is_lattice, is_distributive)


def _require_lattice(p: Poset) -> np.ndarray:
    meet, join = _tables(p)
    if p.n == 0 or (meet < 0).any() or (join < 0).any():
        raise NotALattice("poset is not a lattice")
    return join


def join_irreducible_points(p: Poset) -> list[int]:
    return [x for x in range(p.n) if len(p.lower_covers[x]) == 1]


def join_irreducibles(p: Poset) -> tuple[Poset, tuple[int, ...]]:
    """The induced poset Q_L of join-irreducibles and its index map into ``p``."""
    _require_lattice(p)
    return induced(p, join_irreducible_points(p))


# -- downset lattices ----------------------------------------------------


@dataclass(frozen=True)
class DownsetLattice:
    """J(P): the downsets of ``source`` ordered by inclusion.

    ``masks[i]`` is the downset carried by lattice point ``i`` as a bitmask
    over the source points.
    """
    lattice: Poset
    masks: tuple[int, ...]
    source: Poset

    @property
    def elements(self) -> list[frozenset[int]]:
        return [frozenset(bits(m)) for m in self.masks]

    def index_of(self, points) -> int:
        m = 0
        for x in points:
            m |= 1 << x
        return self.masks.index(m)


def subset_label(p: Poset, mask: int) -> str:
    return "{" + ",".join(p.label(x) for x in bits(mask)) + "}"


def downset_masks(p: Poset, cap: Optional[int] = None) -> list[int]:
    """All downsets of ``p`` as bitmasks, grown from the empty set."""
    cap = size_cap() if cap is None else cap
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for d in frontier:
            for x in range(p.n):
                if not d >> x & 1 and p.down[x] & ~d == 0:
                    e = d | 1 << x
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
                        if len(seen) > cap:
                            raise TooLarge(f"J(P) exceeds the size cap of {cap} elements")
        frontier = nxt
    return sorted(seen, key=lambda m: (m.bit_count(), [x for x in bits(m)]))


def downset_lattice(p: Poset, cap: Optional[int] = None) -> DownsetLattice:
    masks = downset_masks(p, cap)
    index = {m: i for i, m in enumerate(masks)}
    pairs = []
    for i, d in enumerate(masks):
        for x in range(p.n):
            if not d >> x & 1:
                e = d | 1 << x
                j = index.get(e)
                if j is not None:
                    pairs.append((i, j))
    labels = [subset_label(p, m) for m in masks]
    return DownsetLattice(Poset(len(masks), pairs, labels), tuple(masks), p)


# -- Birkhoff representation ---------------------------------------------


@dataclass(frozen=True)
class BirkhoffMap:
    """The isomorphism L -> J(Q_L), w -> {y in Q_L : y <= w}.

    ``forward[w]`` is a bitmask over Q-indices; ``irreducibles[i]`` is the
    lattice point behind Q-index ``i``.
    """
    q: Poset
    irreducibles: tuple[int, ...]
    forward: tuple[int, ...]
    backward: dict

    def image(self, w: int) -> frozenset[int]:
        """f(w) as a set of lattice points."""
        return frozenset(self.irreducibles[i] for i in bits(self.forward[w]))

    def preimage(self, lattice_points) -> int:
        m = 0
        for y in lattice_points:
            m |= 1 << self.irreducibles.index(y)
        return self.backward[m]


def _birkhoff_map(p: Poset, join: np.ndarray) -> Optional[BirkhoffMap]:
    irr = join_irreducible_points(p)
    q, _ = induced(p, irr)
    forward = []
    for w in range(p.n):
        below = p.down[w] | 1 << w
        forward.append(sum(1 << i for i, y in enumerate(irr) if below >> y & 1))
    backward = {m: w for w, m in enumerate(forward)}
    if len(backward) != p.n:
        return None
    try:
        target = set(downset_masks(q, cap=p.n))
    except TooLarge:
        return None
    if target != set(forward):
        return None
    for w in range(p.n):
        for v in range(p.n):
            if p.leq(w, v) != (forward[w] & ~forward[v] == 0):
                return None
    return BirkhoffMap(q, tuple(irr), tuple(forward), backward)


def birkhoff_check(p: Poset) -> tuple[bool, Optional[BirkhoffMap]]:
    """Decide distributivity by rebuilding ``p`` as J(Q_L).

    Returns ``(True, f)`` when f is an order isomorphism onto J(Q_L).
    """
    join = _require_lattice(p)
    f = _birkhoff_map(p, join)
    return f is not None, f


def join_decomposition(p: Poset, f: BirkhoffMap, w: int) -> frozenset[int]:
    parts = f.image(w)
    _, join = _tables(p)
    folded = reduce(lambda a, b: int(join[a, b]), sorted(parts), p.bottom)
    if folded != w:
        raise AssertionError(f"join of f({w}) is {folded}, not {w}")
    return parts


def rank_via_irreducibles(p: Poset, f: BirkhoffMap, w: int) -> int:
    r = f.forward[w].bit_count()
    assert r == p.ranks[w], (r, p.ranks[w])
    return r
