"""Distinguishing numbers of a few small posets, and L_150 rebuilt from its
join-irreducibles."""
from posetdist import (automorphisms, birkhoff_check, distinguishing_number, downset_lattice,
                       gen_divisibility, join_irreducibles, pentagon, pentagon_minus_x,
                       standard_example)

posets = {
    "L_18 (pq^2)": gen_divisibility(18),
    "L_36 (p^2q^2)": gen_divisibility(36),
    "M (pentagon)": pentagon(),
    "L_30 (pqr)": gen_divisibility(30),
    "S_4": standard_example(4),
    "M - x": pentagon_minus_x(),
}
print(f"{'poset':<16}{'n':>4}{'|Aut|':>7}{'D':>4}")
for name, p in posets.items():
    print(f"{name:<16}{p.n:>4}{automorphisms(p).order:>7}{distinguishing_number(p):>4}")

# L_150 is distributive, so it is the lattice of downsets of its join-irreducibles.
L = gen_divisibility(150)
q, idx = join_irreducibles(L)
print("\njoin-irreducibles of L_150:", [L.label(x) for x in idx])
print("downsets of Q:", downset_lattice(q).lattice.n)
ok, f = birkhoff_check(L)
for n in ("75", "30", "150"):
    w = L.index_of(n)
    print(f"f({n}) = {{{', '.join(sorted((L.label(y) for y in f.image(w)), key=int))}}}")
