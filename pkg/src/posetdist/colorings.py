"""Constructive colorings for distributive, divisibility, Boolean and planar lattices.

Each function returns a :class:`~posetdist.symmetry.Coloring`; color names
record where a color came from (``r3`` is the rank-3 color, ``a1`` is color 1
of the coloring of the join-irreducibles, and so on).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Optional, Sequence

from .errors import (BadQColoring, ConstructionFailed, EmbeddingNotPlanar, HasTwins,
                     LeftmostNotAChain, NeedsThreeColors, NotALattice,
                     NotDistributive, NotRankConnected, NotRanked)
from .families import DivisibilitySpec, gen_boolean, gen_divisibility
from .lattice import BirkhoffMap, birkhoff_check, meet_join
from .poset import Poset, is_linear_extension, linear_extensions, rank_data
from .symmetry import (Coloring, dilworth_coloring, distinguishing_chromatic_number,
                       is_distinguishing, is_proper)


def _birkhoff(L: Poset) -> BirkhoffMap:
    try:
        ok, f = birkhoff_check(L)
    except NotALattice as exc:
        raise NotDistributive(str(exc)) from exc
    if not ok:
        raise NotDistributive("lattice is not distributive")
    return f


def _name(v) -> str:
    return f"{v[0]}{v[1]}"


# -- two colors from a linear extension of Q_L -----------------------------------


def linear_extension_coloring(L: Poset, extension: Optional[Sequence[int]] = None) -> Coloring:
    """Red chain f^-1({y1}), f^-1({y1,y2}), ..., f^-1({y1..y_{t-1}}), the rest green.

    ``extension`` lists the join-irreducible points of ``L`` (as points of
    ``L``) in a linear-extension order of Q_L; by default the
    lexicographically least extension is used.
    """
    f = _birkhoff(L)
    irr = f.irreducibles
    if extension is None:
        ext = next(linear_extensions(f.q)) if irr else ()
    else:
        if sorted(extension) != sorted(irr):
            raise ValueError("extension must list exactly the join-irreducibles")
        ext = tuple(irr.index(y) for y in extension)
        if not is_linear_extension(f.q, ext):
            raise ValueError("extension does not respect the order of Q_L")
    colors = [0] * L.n
    mask = 0
    for i in ext[:-1]:
        mask |= 1 << i
        colors[f.backward[mask]] = 1
    return Coloring(tuple(colors), ("green", "red") if len(ext) > 1 else ("green",))


def red_points(c: Coloring) -> list[int]:
    return c.class_of("red")


# -- rank colorings with recolored join-irreducibles ------------------------------


def _q_coloring(f: BirkhoffMap, q_coloring: Optional[Coloring]) -> Coloring:
    if q_coloring is None:
        _, q_coloring = distinguishing_chromatic_number(f.q, witness=True)
        return q_coloring
    if len(q_coloring) != f.q.n:
        raise BadQColoring(f"coloring has {len(q_coloring)} entries, Q_L has {f.q.n} points")
    if not is_proper(f.q, q_coloring):
        raise BadQColoring("coloring of Q_L is not proper")
    if not is_distinguishing(f.q, q_coloring):
        raise BadQColoring("coloring of Q_L is not distinguishing")
    return q_coloring


def rank_plus_qcoloring(L: Poset, q_coloring: Optional[Coloring] = None) -> Coloring:
    """Rank colors off Q_L, fresh colors on Q_L; at most chi_D(Q_L) + |Q_L| colors.

    Without ``q_coloring`` a minimum proper distinguishing coloring of Q_L is
    found by exhaustive search.
    """
    f = _birkhoff(L)
    qc = _q_coloring(f, q_coloring)
    where = {y: i for i, y in enumerate(f.irreducibles)}
    values = [("a", qc[where[x]]) if x in where else ("r", L.ranks[x]) for x in range(L.n)]
    return Coloring.from_values(values, _name)


def improved_qcoloring(L: Poset, q_coloring: Optional[Coloring] = None) -> Coloring:
    """Proper distinguishing coloring with at most |Q_L| + d - 1 colors, d >= 3.

    Starts from rank colors plus the d colors of ``q_coloring`` and removes the
    rank-2 color: points of the three largest Q-color classes at rank >= 3
    (with the required rank-1 points below them) take their rank color, and
    each rank-2 point outside Q_L takes a Q-color chosen from the colors of
    the two rank-1 points it covers.
    """
    f = _birkhoff(L)
    qc = _q_coloring(f, q_coloring)
    d = qc.num_colors
    if d < 3:
        raise NeedsThreeColors(f"Q_L coloring uses {d} colors; at least 3 are needed")
    sizes = [len(cls) for cls in qc.classes()]
    a1, a2, a3 = sorted(range(d), key=lambda c: (-sizes[c], c))[:3]

    r = L.ranks
    phi = {y: qc[i] for i, y in enumerate(f.irreducibles)}
    low1 = [y for y, c in phi.items() if c == a1 and r[y] == 1]
    low2 = [y for y, c in phi.items() if c == a2 and r[y] == 1]
    s1 = {z for z, c in phi.items() if c == a1 and r[z] >= 3}
    s2 = {z for z, c in phi.items()
          if c == a2 and r[z] >= 3 and any(L.lt(y, z) for y in low1)}
    s3 = {z for z, c in phi.items()
          if c == a3 and r[z] >= 3 and any(L.lt(y, z) for y in low1)
          and any(L.lt(w, z) for w in low2)}
    recolored = s1 | s2 | s3

    def g(x: int, y: int) -> int:
        pair = {phi[x], phi[y]}
        if a1 not in pair:
            return a1
        if a2 not in pair:
            return a2
        return a3

    values = []
    for z in range(L.n):
        if z in phi:
            values.append(("r", r[z]) if z in recolored else ("a", phi[z]))
        elif r[z] == 2:
            below = L.lower_covers[z]
            if len(below) != 2 or any(x not in phi or r[x] != 1 for x in below):
                raise ConstructionFailed(f"rank-2 point {z} does not cover two rank-1 points")
            values.append(("a", g(*below)))
        else:
            values.append(("r", r[z]))
    c = Coloring.from_values(values, _name)
    if not (is_proper(L, c) and is_distinguishing(L, c)):
        raise ConstructionFailed("improved coloring failed verification")
    return c


# -- divisibility lattices ---------------------------------------------------------


def falling(m: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= m - i
    return out


def rook_count(r: int, m: int) -> int:
    """Ways to recolor an r-chain with at most one of each of m new colors."""
    return sum(comb(r, l) * falling(m, l) for l in range(min(r, m) + 1))


def new_colors_needed(t: int, r: int) -> int:
    """Least m with t <= rook_count(r, m)."""
    m = 0
    while rook_count(r, m) < t:
        m += 1
    return m


def chain_recolorings(r: int, m: int) -> Iterator[dict[int, int]]:
    """Recolorings of chain positions 0..r-1 with new colors 0..m-1.

    Ordered by number of recolored points, then position subset, then the
    injection, all lexicographically.
    """
    for size in range(min(r, m) + 1):
        for subset in combinations(range(r), size):
            for inj in permutations(range(m), size):
                yield dict(zip(subset, inj))


@dataclass(frozen=True)
class DivisibilityPlan:
    new_colors: int                       # m
    block_sizes: dict                     # chain length r -> number of chains t
    block_colors: dict                    # r -> m_r
    recoloring: dict                      # prime -> {exponent - 1: new color}


def plan_divisibility_coloring(spec: DivisibilitySpec) -> DivisibilityPlan:
    blocks: dict[int, list[int]] = {}
    for p, a in sorted(zip(spec.primes, spec.exponents)):
        blocks.setdefault(a, []).append(p)
    per_block = {r: new_colors_needed(len(ps), r) for r, ps in blocks.items()}
    m = max(per_block.values(), default=0)
    recoloring = {}
    for r, ps in blocks.items():
        for p, rec in zip(ps, chain_recolorings(r, m)):
            recoloring[p] = rec
    return DivisibilityPlan(m, {r: len(ps) for r, ps in blocks.items()}, per_block, recoloring)


def divisibility_coloring(spec: DivisibilitySpec | int) -> Coloring:
    """Rank coloring of L_n with chains of Q recolored by m new colors."""
    if isinstance(spec, int):
        spec = DivisibilitySpec.from_int(spec)
    L = gen_divisibility(spec)
    plan = plan_divisibility_coloring(spec)
    values = [("r", L.ranks[x]) for x in range(L.n)]
    for p, rec in plan.recoloring.items():
        for pos, color in rec.items():
            values[L.index_of(str(p ** (pos + 1)))] = ("n", color)
    return Coloring.from_values(values, _name)


# -- Boolean lattices ---------------------------------------------------------------


def boolean_recolor_sets(n: int) -> tuple[list[frozenset], list[frozenset]]:
    """The a-colored sets S_i and b-colored sets T_i over elements 1..n.

    For even n the sets for n - 1 are used, so n itself is in none of them.
    """
    m = n if n % 2 else n - 1
    half = (m + 1) // 2
    a_sets = [frozenset(range(i, 2 * i)) for i in range(1, half + 1)]
    b_sets = [frozenset(range(m - 2 * i + 2, m - i + 2)) for i in range(1, half + 1)]
    return a_sets, b_sets


def boolean_coloring(n: int) -> Coloring:
    """Rank coloring of B_n with two extra colors a and b; at most n + 3 colors.

    A set that is both some S_i and some T_i (n = 7 has {3,4,5}) keeps a.
    """
    B = gen_boolean(n)
    values = [("r", B.ranks[x]) for x in range(B.n)]
    a_sets, b_sets = boolean_recolor_sets(n)
    for tag, sets in (("b", b_sets), ("a", a_sets)):
        for s in sets:
            values[sum(1 << (e - 1) for e in s)] = (tag, 0)
    return Coloring.from_values(values, lambda v: v[0] if v[0] in "ab" else _name(v))


# -- planar lattices ---------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Left-to-right order of the points at each rank of a standard diagram."""
    order: tuple[tuple[int, ...], ...]

    @classmethod
    def from_x(cls, p: Poset, x: Sequence[float]) -> "Embedding":
        """Order each rank by the given horizontal coordinates."""
        return cls(tuple(tuple(sorted(row, key=lambda v: (x[v], v))) for row in p.rank_levels()))


def twins(p: Poset) -> list[tuple[int, int]]:
    """Incomparable pairs with identical relations to every other point."""
    out = []
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if not p.comparable(x, y) and p.up[x] == p.up[y] and p.down[x] == p.down[y]:
                out.append((x, y))
    return out


def is_rank_connected(p: Poset) -> bool:
    """Whether every pair of consecutive ranks induces a connected cover graph."""
    levels = p.rank_levels()
    for k in range(len(levels) - 1):
        nodes = set(levels[k]) | set(levels[k + 1])
        start = levels[k][0]
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in p.upper_covers[x] + p.lower_covers[x]:
                if y in nodes and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != nodes:
            return False
    return True


def check_embedding(p: Poset, emb: Embedding) -> None:
    """Raise EmbeddingNotPlanar unless rows partition the ranks without crossings."""
    levels = p.rank_levels()
    if len(emb.order) != len(levels) or any(sorted(row) != lvl for row, lvl in zip(emb.order, levels)):
        raise EmbeddingNotPlanar("embedding rows do not partition the points by rank")
    pos = {}
    for row in emb.order:
        for i, x in enumerate(row):
            pos[x] = i
    ranks = p.ranks
    for k in range(len(levels) - 1):
        edges = sorted((pos[a], pos[b]) for a, b in p.covers if ranks[a] == k)
        for (a1, b1), (a2, b2) in combinations(edges, 2):
            if a1 < a2 and b1 > b2:
                raise EmbeddingNotPlanar(f"cover edges cross between ranks {k} and {k + 1}")


def leftmost_chain_coloring(p: Poset, emb: Embedding) -> Coloring:
    """Red on the leftmost point of every rank except 0̂ and 1̂, green elsewhere.

    Requires a twin-free, ranked, rank-connected lattice and a crossing-free
    embedding; the result is checked to be distinguishing.
    """
    if not meet_join(p).is_lattice:
        raise NotALattice("poset is not a lattice")
    if not rank_data(p).is_ranked:
        raise NotRanked("lattice is not ranked")
    pairs = twins(p)
    if pairs:
        raise HasTwins(pairs[0])
    if not is_rank_connected(p):
        raise NotRankConnected("some pair of consecutive ranks is disconnected")
    check_embedding(p, emb)
    left = [row[0] for row in emb.order]
    for a, b in zip(left, left[1:]):
        if (a, b) not in p.covers:
            raise LeftmostNotAChain(f"leftmost points {a} and {b} are not a cover pair")
    colors = [0] * p.n
    for x in left[1:-1]:
        colors[x] = 1
    c = Coloring(tuple(colors), ("green", "red") if len(left) > 2 else ("green",))
    if not is_distinguishing(p, c):
        raise ConstructionFailed("leftmost-chain coloring is not distinguishing")
    return c


def grid_embedding(p: Poset) -> Embedding:
    """Embedding of a poset labelled 'i,j' with larger i drawn further left."""
    coords = [tuple(map(int, p.label(x).split(","))) for x in range(p.n)]
    return Embedding.from_x(p, [j - i for i, j in coords])
