"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run ``pytest -s tests/test_acceptance.py`` (or this file directly) to see
the lines.
"""
import random
import time
from contextlib import contextmanager
from math import comb

import pytest

from oracles import all_posets, max_antichain, naive_numbers, random_poset
from posetdist import (DivisibilitySpec, Embedding, Poset, automorphisms, birkhoff_check,
                       boolean_coloring, boolean_recolor_sets, chain_partition,
                       dilworth_coloring, distinguishing_chromatic_number,
                       distinguishing_number, downset_lattice, gen_boolean, gen_chain_sum,
                       gen_divisibility, grid_embedding, is_chain_proper, is_distinguishing,
                       is_proper, is_rank_connected, join_irreducibles,
                       leftmost_chain_coloring, linear_extension_coloring, linear_extensions,
                       meet_join, new_colors_needed, pentagon, pentagon_minus_x,
                       plan_divisibility_coloring, rank_data, red_points, rook_count,
                       standard_example, twins, width)
from posetdist.colorings import falling
from posetdist.errors import HasTwins, TooLarge
from posetdist.families import grid


@contextmanager
def criterion(num, title):
    try:
        yield
    except BaseException:
        print(f"FAIL  criterion {num}: {title}")
        raise
    print(f"PASS  criterion {num}: {title}")


def timed(fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t


# -- 1 ---------------------------------------------------------------------------


def test_criterion_01_small_lattice_values():
    cases = [("L_pq^2", gen_divisibility(18), 1), ("L_p^2q^2", gen_divisibility(36), 2),
             ("M", pentagon(), 1), ("L_pqr", gen_divisibility(30), 2),
             ("S4", standard_example(4), 2), ("M-x", pentagon_minus_x(), 2)]
    with criterion(1, "D values of the six small posets, each under 1 s"):
        for name, p, want in cases:
            d, secs = timed(distinguishing_number, p)
            assert d == want, (name, d)
            assert secs < 1.0, (name, secs)


# -- 2 ---------------------------------------------------------------------------


def test_criterion_02_birkhoff_round_trip_l150():
    with criterion(2, "L_150 join-irreducibles, |J(Q)| = 12, f(75) = {3,5,25}"):
        L = gen_divisibility(150)
        q, idx = join_irreducibles(L)
        assert {int(L.label(x)) for x in idx} == {2, 3, 5, 25}
        assert downset_lattice(q).lattice.n == 12
        ok, f = birkhoff_check(L)
        assert ok
        assert {int(L.label(y)) for y in f.image(L.index_of("75"))} == {3, 5, 25}


# -- 3 ---------------------------------------------------------------------------


def _random_distributive_lattices(count, seed=2024):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = random_poset(rng, rng.randint(1, 9), rng.random() * 0.6)
        try:
            L = downset_lattice(p, cap=64).lattice
        except TooLarge:
            continue
        out.append(L)
    return out


def test_criterion_03_linear_extension_colorings():
    with criterion(3, "200 random J(P), every extension (cap 50): distinguishing, |Q|-1 red"):
        checked = 0
        for L in _random_distributive_lattices(200):
            assert L.n <= 64
            ok, f = birkhoff_check(L)
            assert ok
            for ext in linear_extensions(f.q, limit=50):
                c = linear_extension_coloring(L, [f.irreducibles[i] for i in ext])
                assert is_distinguishing(L, c)
                assert len(red_points(c)) == max(f.q.n - 1, 0)
                checked += 1
        assert checked >= 200


# -- 4 ---------------------------------------------------------------------------


def test_criterion_04_exact_chromatic_values():
    with criterion(4, "chi_D(M) = 4, chi_D(B3) = 5, chi_D(B4) = 7, each under 60 s"):
        for p, want in ((pentagon(), 4), (gen_boolean(3), 5), (gen_boolean(4), 7)):
            k, secs = timed(distinguishing_chromatic_number, p)
            assert k == want
            assert secs < 60


# -- 5 ---------------------------------------------------------------------------


def test_criterion_05_boolean_construction():
    with criterion(5, "Boolean colorings for n <= 8 and the n = 7 sets"):
        for n in range(1, 9):
            B = gen_boolean(n)
            c = boolean_coloring(n)
            assert c.num_colors <= n + 3
            assert is_proper(B, c) and is_distinguishing(B, c)
        a, b = boolean_recolor_sets(7)
        assert a == [{1}, {2, 3}, {3, 4, 5}, {4, 5, 6, 7}]
        assert b == [{7}, {6, 5}, {5, 4, 3}, {4, 3, 2, 1}]


# -- 6 ---------------------------------------------------------------------------


def test_criterion_06_chain_sum_formulas():
    with criterion(6, "D and chi_D of t disjoint r-chains for t*r <= 12"):
        for t in range(1, 13):
            for r in range(1, 12 // t + 1):
                p = gen_chain_sum([(t, r)])
                d = next(k for k in range(1, t + 2) if (k - 1) ** r < t <= k ** r)
                chi = next(k for k in range(r, r + t + 2)
                           if falling(k - 1, r) < t <= falling(k, r))
                assert distinguishing_number(p) == d, (t, r)
                assert distinguishing_chromatic_number(p) == chi, (t, r)


# -- 7 ---------------------------------------------------------------------------


def test_criterion_07_divisibility():
    with criterion(7, "D(L_n) for n <= 10000; r = 5, t = 31 needs m = 2"):
        seen = 0
        for n in range(1, 10001):
            spec = DivisibilitySpec.from_int(n)
            if spec.divisor_count > 64:
                continue
            seen += 1
            want = 1 if len(set(spec.exponents)) == len(spec.exponents) else 2
            assert distinguishing_number(gen_divisibility(spec)) == want, n
        assert seen == 10000
        assert sum(comb(5, l) * falling(2, l) for l in range(3)) == 31 == rook_count(5, 2)
        assert new_colors_needed(31, 5) == 2
        primes = [p for p in range(2, 200) if all(p % d for d in range(2, p))][:31]
        plan = plan_divisibility_coloring(DivisibilitySpec(tuple(primes), (5,) * 31))
        assert plan.new_colors == 2 and plan.block_sizes == {5: 31}


# -- 8 ---------------------------------------------------------------------------


def test_criterion_08_dilworth():
    with criterion(8, "500 random posets: Dilworth coloring is width-many, chain-proper, distinguishing"):
        rng = random.Random(88)
        for _ in range(500):
            p = random_poset(rng, rng.randint(1, 20), rng.random() * 0.5)
            c = dilworth_coloring(p)
            w = width(p)
            assert c.num_colors == w
            assert is_chain_proper(p, c) and is_distinguishing(p, c)
            if p.n <= 15:
                assert len(chain_partition(p)) == max_antichain(p)


# -- 9 ---------------------------------------------------------------------------


def _planar_fixtures():
    fixtures = []
    for a, b in ((1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)):
        g = grid(a, b)
        fixtures.append((f"grid {a}x{b}", g, grid_embedding(g)))
    for n in (72, 108, 200, 48):
        L = gen_divisibility(n)
        x = [_p_power(int(s), 3) - _p_power(int(s), 2) if n % 3 == 0 else
             _p_power(int(s), 5) - _p_power(int(s), 2) for s in L.labels]
        fixtures.append((f"L_{n}", L, Embedding.from_x(L, x)))
    rng = random.Random(9)
    while len(fixtures) < 20:
        p = random_poset(rng, rng.randint(3, 7), 0.5)
        if width(p) != 2:
            continue
        J = downset_lattice(p)
        c1, c2 = chain_partition(p)
        x = [len(set(d) & set(c2)) - len(set(d) & set(c1)) for d in J.elements]
        L = J.lattice
        if twins(L) or not is_rank_connected(L):
            continue
        fixtures.append((f"J(P{len(fixtures)})", L, Embedding.from_x(L, x)))
    return fixtures


def _p_power(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _with_twin(g: Poset, x: int) -> Poset:
    """Add a copy of ``x`` with the same lower and upper covers."""
    n = g.n
    pairs = list(g.covers) + [(y, n) for y in g.lower_covers[x]] + \
        [(n, y) for y in g.upper_covers[x]]
    return Poset(n + 1, pairs)


def test_criterion_09_planar_lattices():
    with criterion(9, "leftmost-chain colorings on >= 10 planar fixtures; a twin is rejected"):
        fixtures = _planar_fixtures()
        assert len(fixtures) >= 10
        for name, L, emb in fixtures:
            assert not twins(L) and is_rank_connected(L), name
            c = leftmost_chain_coloring(L, emb)
            assert c.num_colors <= 2 and is_distinguishing(L, c), name
        g = grid(2, 2)
        corner = g.index_of("2,0")
        mutant = _with_twin(g, corner)
        assert meet_join(mutant).is_lattice and rank_data(mutant).is_ranked
        emb = grid_embedding(g)
        rows = [list(row) for row in emb.order]
        rows[2].insert(rows[2].index(corner) + 1, g.n)
        with pytest.raises(HasTwins) as err:
            leftmost_chain_coloring(mutant, Embedding(tuple(map(tuple, rows))))
        assert set(err.value.pair) == {corner, g.n}


# -- 10 --------------------------------------------------------------------------


def _oracle_corpus():
    corpus = [p for n in range(6) for p in all_posets(n)]
    corpus += [pentagon(), pentagon_minus_x(), standard_example(3), standard_example(4),
               gen_boolean(3), gen_divisibility(30), gen_divisibility(18),
               gen_chain_sum([(3, 2)]), gen_chain_sum([(4, 2)]), gen_chain_sum([(2, 3), (1, 2)])]
    rng = random.Random(10)
    corpus += [random_poset(rng, rng.randint(6, 8), 0.15 + 0.5 * rng.random()) for _ in range(30)]
    return corpus


def test_criterion_10_search_matches_naive_oracle():
    with criterion(10, "orbit-pruned D / chi_D equal the naive oracle on the n <= 8 corpus"):
        for p in _oracle_corpus():
            assert p.n <= 8
            d, chi = naive_numbers(p)
            assert distinguishing_number(p) == d
            assert distinguishing_chromatic_number(p) == chi


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main(["-q", "-s", __file__]))
