"""Automorphisms, distinguishing colorings, and exact D / chi_D search.

Automorphism groups are found by individualization-refinement: colour
refinement of the Hasse digraph, a leftmost path of individualized points
(the base), and a backtracking search for one coset representative per
basic-orbit point, deepest level first, skipping points already reached by
the generators found so far.  The product of basic-orbit sizes is the group
order.

The coloring search assigns colors along a fixed point order and prunes with

* value symmetry: colors appear in first-occurrence order;
* lex-leader constraints from the stabilizer chain along that order: a base
  point never gets a larger color than any point of its basic orbit;
* dead partial colorings: a non-identity automorphism that preserves the
  assigned colors and fixes every unassigned point survives every
  completion.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .errors import CapExceeded, ConstructionFailed, NotTwoDistinguishable
from .poset import Poset, bits, chain_partition, height

Permutation = tuple[int, ...]


# -- colorings ----------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """A total map point -> color id with every id below ``num_colors`` used.

    ``names`` optionally gives a display name per color id.
    """
    colors: tuple[int, ...]
    names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        used = set(self.colors)
        if used != set(range(len(used))):
            raise ValueError(f"color ids {sorted(used)} are not 0..k-1")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != len(used):
                raise ValueError("one name per color is required")

    @classmethod
    def from_values(cls, values: Sequence, name: Callable = str) -> "Coloring":
        """Densify arbitrary sortable color values, keeping their order."""
        distinct = sorted(set(values))
        index = {v: i for i, v in enumerate(distinct)}
        return cls(tuple(index[v] for v in values), tuple(name(v) for v in distinct))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, x):
        return self.colors[x]

    def name(self, color: int) -> str:
        return self.names[color] if self.names is not None else str(color)

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.num_colors)]
        for x, c in enumerate(self.colors):
            out[c].append(x)
        return out

    def class_of(self, name: str) -> list[int]:
        """Points whose color carries ``name``."""
        return [x for x, c in enumerate(self.colors) if self.name(c) == name]


def uniform(n: int) -> Coloring:
    return Coloring((0,) * n)


# -- refinement engine -----------------------------------------------------


class _Structure:
    """Directed adjacency used by refinement; posets use their Hasse digraph."""

    def __init__(self, n: int, out: Sequence[Sequence[int]], inn: Sequence[Sequence[int]],
                 edges: frozenset):
        self.n = n
        self.out = out
        self.inn = inn
        self.edges = edges

    @classmethod
    def of(cls, p: Poset) -> "_Structure":
        return cls(p.n, p.upper_covers, p.lower_covers, p.covers)

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        return all((perm[a], perm[b]) in self.edges for a, b in self.edges)


def _densify(keys: Sequence) -> list[int]:
    index = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [index[k] for k in keys]


def _refine(s: _Structure, cells: list[int]) -> tuple[list[int], tuple]:
    """Colour refinement to the coarsest equitable partition finer than ``cells``.

    Cell ids stay ordered consistently with the input, so the result is an
    isomorphism-invariant function of the ordered partition.  The trace
    records the split history for comparing search branches.
    """
    ncells = len(set(cells))
    trace = []
    out, inn = s.out, s.inn
    while True:
        sigs = [(cells[x],
                 tuple(sorted(cells[y] for y in out[x])),
                 tuple(sorted(cells[y] for y in inn[x]))) for x in range(s.n)]
        distinct = sorted(set(sigs))
        if len(distinct) == ncells:
            break
        index = {sg: i for i, sg in enumerate(distinct)}
        cells = [index[sg] for sg in sigs]
        ncells = len(distinct)
        trace.append(hash(tuple(distinct)))
    trace.append(ncells)
    return cells, tuple(trace)


def _individualize(cells: list[int], x: int) -> list[int]:
    cx = cells[x]
    return [c + 1 if c > cx or (c == cx and y != x) else c for y, c in enumerate(cells)]


@dataclass
class _Level:
    cells: list[int]   # partition before individualizing ``point``
    target: int        # cell id that was split
    point: int
    trace: tuple       # refinement trace after individualizing


def _first_path(s: _Structure, cells: list[int], priority: Sequence[int]):
    levels = []
    while True:
        sizes = Counter(cells)
        if len(sizes) == s.n:
            return levels, cells
        v = min((x for x in range(s.n) if sizes[cells[x]] > 1), key=priority.__getitem__)
        nxt, trace = _refine(s, _individualize(cells, v))
        levels.append(_Level(cells, cells[v], v, trace))
        cells = nxt


def _extend(t: _Structure, levels, j: int, cells: list[int], leaf0: Sequence[int],
            accept: Callable[[list[int]], bool]) -> Optional[list[int]]:
    """Descend in ``t`` along cells matching ``levels[j:]``; return an accepted leaf map."""
    if j == len(levels):
        inv = [0] * t.n
        for x, c in enumerate(cells):
            inv[c] = x
        perm = [0] * t.n
        for pos, x in enumerate(leaf0):
            perm[x] = inv[pos]
        return perm if accept(perm) else None
    lv = levels[j]
    for w in range(t.n):
        if cells[w] != lv.target:
            continue
        nxt, trace = _refine(t, _individualize(cells, w))
        if trace != lv.trace:
            continue
        found = _extend(t, levels, j + 1, nxt, leaf0, accept)
        if found is not None:
            return found
    return None


def _leaf_order(cells: list[int]) -> list[int]:
    inv = [0] * len(cells)
    for x, c in enumerate(cells):
        inv[c] = x
    return inv


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class _GroupData:
    generators: list[Permutation]
    levels: list[_Level]
    basic_orbits: list[list[int]]
    orbits: list[list[int]]

    @property
    def order(self) -> int:
        out = 1
        for orb in self.basic_orbits:
            out *= len(orb)
        return out


def _group(s: _Structure, keys: Sequence, priority: Optional[Sequence[int]] = None,
           stop_at_first: bool = False) -> _GroupData:
    n = s.n
    if priority is None:
        priority = range(n)
    cells, _ = _refine(s, _densify(keys))
    levels, leaf = _first_path(s, cells, priority)
    leaf0 = _leaf_order(leaf)
    uf = _UnionFind(n)
    gens: list[Permutation] = []
    basic: list[list[int]] = [[] for _ in levels]

    def accept(perm):
        return all(keys[perm[x]] == keys[x] for x in range(n)) and s.is_automorphism(perm)

    for i in reversed(range(len(levels))):
        lv = levels[i]
        for u in range(n):
            if lv.cells[u] != lv.target or uf.find(u) == uf.find(lv.point):
                continue
            nxt, trace = _refine(s, _individualize(lv.cells, u))
            if trace != lv.trace:
                continue
            perm = _extend(s, levels, i + 1, nxt, leaf0, accept)
            if perm is None:
                continue
            gens.append(tuple(perm))
            for x in range(n):
                uf.union(x, perm[x])
            if stop_at_first:
                return _GroupData(gens, levels, basic, [])
        root = uf.find(lv.point)
        basic[i] = [x for x in range(n) if uf.find(x) == root]
    groups = {}
    for x in range(n):
        groups.setdefault(uf.find(x), []).append(x)
    return _GroupData(gens, levels, basic, sorted(groups.values()))


def _color_keys(p: Poset, c: Optional[Coloring]) -> list:
    ranks = p.ranks
    if c is None:
        return list(ranks)
    if len(c) != p.n:
        raise ValueError(f"coloring has {len(c)} entries for {p.n} points")
    return [(c[x], ranks[x]) for x in range(p.n)]


# -- public queries -------------------------------------------------------------


@dataclass(frozen=True)
class AutReport:
    generators: list[Permutation]
    order: int
    orbits: list[list[int]]


def automorphisms(p: Poset, c: Optional[Coloring] = None) -> AutReport:
    """Generators, order, and orbits of Aut(p) (color-preserving if ``c`` given)."""
    g = _group(_Structure.of(p), _color_keys(p, c))
    return AutReport(g.generators, g.order, g.orbits)


def color_automorphism(p: Poset, c: Coloring) -> Optional[Permutation]:
    """A non-identity automorphism preserving ``c``, or None."""
    g = _group(_Structure.of(p), _color_keys(p, c), stop_at_first=True)
    return g.generators[0] if g.generators else None


def is_distinguishing(p: Poset, c: Coloring) -> bool:
    return color_automorphism(p, c) is None


def is_proper(p: Poset, c: Coloring) -> bool:
    return all(c[x] != c[y] for x in range(p.n) for y in bits(p.up[x]))


def is_chain_proper(p: Poset, c: Coloring) -> bool:
    return all(c[x] != c[y] for x in range(p.n) for y in range(x + 1, p.n)
               if not p.comparable(x, y))


def pinned_points(p: Poset, c: Coloring) -> set[int]:
    g = _group(_Structure.of(p), _color_keys(p, c))
    return {orb[0] for orb in g.orbits if len(orb) == 1}


def is_automorphism(p: Poset, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(p.n)):
        return False
    return all(p.leq(perm[x], perm[y]) == p.leq(x, y) for x in range(p.n) for y in range(p.n))


def isomorphism(p: Poset, q: Poset) -> Optional[Permutation]:
    """A map ``phi`` with ``x <= y`` in p iff ``phi[x] <= phi[y]`` in q, or None."""
    if p.n != q.n or len(p.covers) != len(q.covers):
        return None
    sp, sq = _Structure.of(p), _Structure.of(q)
    kp, kq = list(p.ranks), list(q.ranks)
    if sorted(kp) != sorted(kq):
        return None
    cp, tp = _refine(sp, _densify(kp))
    cq, tq = _refine(sq, _densify(kq))
    if tp != tq or sorted(cp) != sorted(cq):
        return None
    levels, leaf = _first_path(sp, cp, range(p.n))

    def accept(perm):
        return all((perm[a], perm[b]) in sq.edges for a, b in sp.edges)

    perm = _extend(sq, levels, 0, cq, _leaf_order(leaf), accept)
    return tuple(perm) if perm is not None else None


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return isomorphism(p, q) is not None


# -- exact search ----------------------------------------------------------------


def search_order(p: Poset) -> list[int]:
    """Breadth-first order over the Hasse diagram, one component at a time."""
    seen = [False] * p.n
    order = []
    starts = sorted(range(p.n), key=lambda x: (p.ranks[x], x))
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(p.upper_covers[x] + p.lower_covers[x]):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def _search(s: _Structure, keys: Sequence, conflicts: Sequence[int], order: Sequence[int],
            k: int) -> Optional[list[int]]:
    """Color points in ``order`` with at most ``k`` colors so that the only
    automorphism of ``s`` preserving ``keys`` and the colors is the identity.
    Points whose bit is set in ``conflicts[x]`` must differ from ``x``."""
    n = s.n
    priority = [0] * n
    for i, x in enumerate(order):
        priority[x] = i
    group = _group(s, keys, priority)

    # lex-leader: a base point's color bounds its basic orbit from below
    floor_of = [[] for _ in range(n)]
    for lv, orbit in zip(group.levels, group.basic_orbits):
        for u in orbit:
            if u != lv.point:
                floor_of[u].append(lv.point)
    colors = [-1] * n

    def dead() -> bool:
        marks = [(0, colors[x], keys[x]) if colors[x] >= 0 else (1, x, keys[x]) for x in range(n)]
        return bool(_group(s, marks, stop_at_first=True).generators)

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        x = order[i]
        lo = max((colors[v] for v in floor_of[x]), default=0)
        hi = min(k - 1, used)
        banned = {colors[y] for y in bits(conflicts[x])}
        for col in range(lo, hi + 1):
            if col in banned:
                continue
            colors[x] = col
            if not dead() and rec(i + 1, max(used, col + 1)):
                return True
        colors[x] = -1
        return False

    return colors if rec(0, 0) else None


def find_distinguishing_coloring(p: Poset, k: int, proper: bool = False) -> Optional[Coloring]:
    """A distinguishing coloring with at most ``k`` colors, or None if none exists."""
    n = p.n
    if n == 0:
        return Coloring(())
    if k < 1:
        return None
    if automorphisms(p).order == 1:
        if not proper:
            return uniform(n)
        return Coloring.from_values(p.ranks) if height(p) <= k else None
    conflicts = [p.comparable_mask(x) if proper else 0 for x in range(n)]
    colors = _search(_Structure.of(p), list(p.ranks), conflicts, search_order(p), k)
    return Coloring(tuple(colors)) if colors is not None else None


def graph_distinguishing_coloring(n: int, edges: Iterable[tuple[int, int]], k: int,
                                  proper: bool = False) -> Optional[Coloring]:
    """Same search for a simple undirected graph (e.g. a comparability graph)."""
    adj = [set() for _ in range(n)]
    for a, b in edges:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    nbrs = [tuple(sorted(a)) for a in adj]
    arcs = frozenset((a, b) for a in range(n) for b in adj[a])
    s = _Structure(n, nbrs, nbrs, arcs)
    conflicts = [sum(1 << y for y in adj[x]) if proper else 0 for x in range(n)]
    seen, order = [False] * n, []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in nbrs[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    if n == 0:
        return Coloring(())
    colors = _search(s, [0] * n, conflicts, order, k)
    return Coloring(tuple(colors)) if colors is not None else None


def comparability_edges(p: Poset) -> list[tuple[int, int]]:
    return [(x, y) for x in range(p.n) for y in bits(p.up[x])]


def _minimum(p: Poset, start: int, cap: int, proper: bool, witness: bool):
    for k in range(start, cap + 1):
        c = find_distinguishing_coloring(p, k, proper)
        if c is not None:
            return (k, c) if witness else k
    kind = "proper distinguishing" if proper else "distinguishing"
    raise CapExceeded(f"no {kind} coloring with at most {cap} colors")


def distinguishing_number(p: Poset, cap: Optional[int] = None, witness: bool = False):
    """D(p) by exhaustive search; with ``witness`` also return a coloring."""
    if p.n == 0:
        return (0, Coloring(())) if witness else 0
    return _minimum(p, 1, p.n if cap is None else cap, False, witness)


def distinguishing_chromatic_number(p: Poset, cap: Optional[int] = None, witness: bool = False):
    """chi_D(p) by exhaustive search, starting from the height of p."""
    if p.n == 0:
        return (0, Coloring(())) if witness else 0
    cap = p.n if cap is None else cap
    return _minimum(p, height(p), cap, True, witness)


def dilworth_coloring(p: Poset) -> Coloring:
    """Color chain i of a minimum chain partition with color i."""
    colors = [0] * p.n
    for i, ch in enumerate(chain_partition(p)):
        for x in ch:
            colors[x] = i
    return Coloring(tuple(colors))


def chain_proper_distinguishing_number(p: Poset, verify: bool = False) -> int:
    """The width of p; with ``verify`` the Dilworth coloring is checked too."""
    c = dilworth_coloring(p)
    if verify and not (is_chain_proper(p, c) and is_distinguishing(p, c)):
        raise ConstructionFailed("Dilworth coloring is not chain-proper and distinguishing")
    return c.num_colors


def min_color_class_size(p: Poset) -> int:
    """Smallest color class over all distinguishing 2-colorings (the 2-distinguishing cost)."""
    report = automorphisms(p)
    if report.order == 1:
        return 0
    if find_distinguishing_coloring(p, 2) is None:
        raise NotTwoDistinguishable("poset has no distinguishing 2-coloring")
    reps = {orb[0] for orb in report.orbits}
    for size in range(1, p.n // 2 + 1):
        for red in combinations(range(p.n), size):
            if not reps.intersection(red):
                continue
            colors = [0] * p.n
            for x in red:
                colors[x] = 1
            if is_distinguishing(p, Coloring(tuple(colors))):
                return size
    raise AssertionError("a distinguishing 2-coloring exists but none was found")


def permutation_preserves(c: Coloring, perm: Iterable[int]) -> bool:
    return all(c[x] == c[y] for x, y in enumerate(perm))
