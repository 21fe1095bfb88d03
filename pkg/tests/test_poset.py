import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_linear_extensions, max_antichain, random_poset
from posetdist import (Poset, chain_partition, dual, from_cover_pairs, gen_divisibility,
                       is_comparable, is_isomorphic, is_linear_extension, linear_extensions,
                       pentagon, rank_data, width)
from posetdist.errors import BadIndex, CyclicInput
from posetdist.families import antichain, chain


@st.composite
def posets(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.floats(0.0, 1.0))
    return random_poset(random.Random(seed), n, density)


def test_pentagon_height_follows_long_side():
    m = pentagon()
    assert rank_data(m).height == 4
    z, y, x, v = m.pts("z", "y", "x", "v")
    assert [m.ranks[p] for p in (z, y, x, v)] == [0, 1, 2, 3]


def test_singleton_closure():
    p = from_cover_pairs(1, [])
    assert p.closure.tolist() == [[True]]


def test_redundant_pair_is_reduced():
    p = from_cover_pairs(3, [(0, 1), (1, 2), (0, 2)])
    assert p.covers == {(0, 1), (1, 2)}
    assert p.lt(0, 2)


def test_cycle_rejected():
    with pytest.raises(CyclicInput):
        Poset(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(CyclicInput):
        Poset(2, [(1, 1)])


def test_index_out_of_range():
    with pytest.raises(BadIndex):
        Poset(2, [(0, 2)])


def test_comparability_examples():
    m = pentagon()
    assert not is_comparable(m, *m.pts("w", "y"))
    assert is_comparable(m, 3, 3)
    assert is_comparable(chain(3), 0, 2)


def test_rank_data_examples():
    assert rank_data(gen_divisibility(36)).is_ranked is True
    assert rank_data(gen_divisibility(36)).height == 5
    assert rank_data(pentagon()).is_ranked is False
    rd = rank_data(antichain(4))
    assert (rd.width, rd.height, rd.is_ranked) == (4, 1, None)


def test_chain_partition_examples():
    parts = chain_partition(pentagon())
    assert len(parts) == 2
    m = pentagon()
    assert all(m.lt(a, b) for c in parts for a, b in zip(c, c[1:]))
    assert len(chain_partition(chain(5))) == 1
    assert len(chain_partition(antichain(5))) == 5


def test_linear_extension_counts():
    assert len(list(linear_extensions(antichain(2)))) == 2
    assert len(list(linear_extensions(chain(3)))) == 1
    # a, b, c incomparable and c < d: the join-irreducibles of L_150
    q = Poset(4, [(2, 3)])
    assert len(list(linear_extensions(q))) == len(brute_linear_extensions(q)) == 12
    assert len(list(linear_extensions(q, limit=5))) == 5


def test_dual_examples():
    assert is_isomorphic(dual(chain(3)), chain(3))
    lpq2 = gen_divisibility(18)
    assert is_isomorphic(dual(lpq2), lpq2)


@settings(max_examples=120, deadline=None)
@given(posets())
def test_closure_is_transitive_and_matches_comparability(p):
    c = p.closure.astype(int)
    assert np.array_equal((c @ c) > 0, p.closure)
    assert np.array_equal(p.closure & p.closure.T, np.eye(p.n, dtype=bool))
    for x in range(p.n):
        for y in range(p.n):
            assert is_comparable(p, x, y) == bool(p.closure[x, y] or p.closure[y, x])


@settings(max_examples=120, deadline=None)
@given(posets())
def test_covers_are_transitively_reduced(p):
    for a, b in p.covers:
        assert not any(p.lt(a, c) and p.lt(c, b) for c in range(p.n))


@settings(max_examples=120, deadline=None)
@given(posets())
def test_rank_is_minimal_strict_labelling(p):
    r = p.ranks
    for x in range(p.n):
        assert (r[x] == 0) == (not p.down[x])
        below = [r[y] for y in p.lower_covers[x]]
        assert r[x] == (max(below) + 1 if below else 0)


@settings(max_examples=150, deadline=None)
@given(posets(max_n=12))
def test_width_matches_brute_antichain(p):
    parts = chain_partition(p)
    assert sorted(x for c in parts for x in c) == list(range(p.n))
    for c in parts:
        assert all(p.lt(a, b) for a, b in zip(c, c[1:]))
    assert len(parts) == width(p) == max_antichain(p)


@settings(max_examples=80, deadline=None)
@given(posets(max_n=7))
def test_linear_extensions_match_permutation_filter(p):
    exts = list(linear_extensions(p))
    assert exts == sorted(exts)
    assert all(is_linear_extension(p, e) for e in exts)
    assert set(exts) == set(brute_linear_extensions(p))


@settings(max_examples=60, deadline=None)
@given(posets())
def test_dual_is_an_involution(p):
    assert dual(dual(p)) == p
