"""Generators for the poset families the constructions operate on."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Sequence

from .errors import TooLarge
from .lattice import DownsetLattice, downset_lattice, size_cap
from .poset import Poset, remove_points

BOOLEAN_MAX_RANK = 20


def chain(r: int) -> Poset:
    return Poset(r, [(i, i + 1) for i in range(r - 1)])


def antichain(n: int) -> Poset:
    return Poset(n, [])


def gen_chain_sum(blocks: Sequence[tuple[int, int]]) -> Poset:
    """Disjoint union of ``t`` chains of ``r`` points for each ``(t, r)`` block.

    Chains are laid out one after another, each bottom-to-top.
    """
    pairs, labels = [], []
    n = 0
    c = 0
    for t, r in blocks:
        if t < 1 or r < 1:
            raise ValueError(f"block ({t}, {r}) needs t, r >= 1")
        for _ in range(t):
            pairs.extend((n + i, n + i + 1) for i in range(r - 1))
            labels.extend(f"c{c}.{i}" for i in range(r))
            n += r
            c += 1
    return Poset(n, pairs, labels)


def boolean_label(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1) + "}"


def gen_boolean(n: int, cap: int = BOOLEAN_MAX_RANK) -> Poset:
    """B_n with point ``m`` the subset whose element ``i+1`` is bit ``i`` of ``m``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise TooLarge(f"B_{n} has 2^{n} points, above the cap 2^{cap}")
    size = 1 << n
    pairs = [(m, m | 1 << i) for m in range(size) for i in range(n) if not m >> i & 1]
    return Poset(size, pairs, [boolean_label(m) for m in range(size)])


@dataclass(frozen=True)
class DivisibilitySpec:
    """n = prod(p_i ** a_i) with distinct primes and positive exponents."""
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.primes) != len(self.exponents):
            raise ValueError("primes and exponents differ in length")
        if len(set(self.primes)) != len(self.primes):
            raise ValueError("primes must be distinct")
        if any(a < 1 for a in self.exponents):
            raise ValueError("exponents must be positive")

    @classmethod
    def from_int(cls, n: int) -> "DivisibilitySpec":
        if n < 1:
            raise ValueError("n must be positive")
        primes, exps = [], []
        d = 2
        while d * d <= n:
            if n % d == 0:
                a = 0
                while n % d == 0:
                    n //= d
                    a += 1
                primes.append(d)
                exps.append(a)
            d += 1
        if n > 1:
            primes.append(n)
            exps.append(1)
        return cls(tuple(primes), tuple(exps))

    @property
    def value(self) -> int:
        return prod(p ** a for p, a in zip(self.primes, self.exponents))

    @property
    def divisor_count(self) -> int:
        return prod(a + 1 for a in self.exponents)


def gen_divisibility(spec: DivisibilitySpec | int, cap: int | None = None) -> Poset:
    """The divisors of n ordered by divisibility, points in increasing value."""
    if isinstance(spec, int):
        spec = DivisibilitySpec.from_int(spec)
    cap = size_cap() if cap is None else cap
    if spec.divisor_count > cap:
        raise TooLarge(f"L_n has {spec.divisor_count} points, above the cap {cap}")
    divisors = sorted(prod(p ** e for p, e in zip(spec.primes, es))
                      for es in product(*(range(a + 1) for a in spec.exponents)))
    index = {d: i for i, d in enumerate(divisors)}
    pairs = [(index[d], index[d * p]) for d in divisors for p in spec.primes
             if d * p in index]
    return Poset(len(divisors), pairs, [str(d) for d in divisors])


def gen_downset(p: Poset, cap: int | None = None) -> DownsetLattice:
    return downset_lattice(p, cap)


def pentagon() -> Poset:
    """The non-distributive five-point lattice z < w < v, z < y < x < v."""
    names = ["z", "w", "y", "x", "v"]
    pairs = [(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)]
    return Poset(5, pairs, names)


def pentagon_minus_x() -> Poset:
    m = pentagon()
    return remove_points(m, [m.index_of("x")])


def standard_example(k: int) -> Poset:
    """S_k: minimal a_i below maximal A_j exactly when i != j."""
    low = [chr(ord("a") + i) for i in range(k)]
    pairs = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    return Poset(2 * k, pairs, low + [s.upper() for s in low])


def ten_point_lattice() -> Poset:
    """A ten-point distributive lattice whose join-irreducibles are a < b, a < c, d."""
    pairs = [(0, 1), (0, 2), (1, 4), (1, 5), (1, 3), (2, 3), (4, 8), (4, 6),
             (5, 8), (5, 7), (3, 6), (3, 7), (8, 9), (6, 9), (7, 9)]
    return Poset(10, pairs, [f"w{i}" for i in range(10)])


def grid(a: int, b: int) -> Poset:
    """Product of an (a+1)-chain and a (b+1)-chain; point (i, j) has label 'i,j'."""
    idx = {(i, j): k for k, (i, j) in enumerate(product(range(a + 1), range(b + 1)))}
    pairs = []
    for (i, j), k in idx.items():
        if i < a:
            pairs.append((k, idx[i + 1, j]))
        if j < b:
            pairs.append((k, idx[i, j + 1]))
    return Poset(len(idx), pairs, [f"{i},{j}" for i, j in idx])
