"""Chain-proper colorings use exactly the width; planar lattices need two
colors; and the poset chi_D can sit far below that of its comparability graph."""
import random

from posetdist import (Embedding, chain_proper_distinguishing_number, comparability_edges,
                       dilworth_coloring, distinguishing_chromatic_number, gen_chain_sum,
                       gen_divisibility, graph_distinguishing_coloring, grid_embedding,
                       is_distinguishing, leftmost_chain_coloring, red_points, width)
from posetdist.families import grid
from posetdist.poset import Poset

rng = random.Random(4)
for _ in range(5):
    n = rng.randint(6, 14)
    p = Poset(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.25])
    c = dilworth_coloring(p)
    print(f"n={n:>2} width={width(p)} colors={c.num_colors} distinguishing={is_distinguishing(p, c)}")
print("chain-proper number of B_3:", chain_proper_distinguishing_number(gen_divisibility(30)))

L = gen_divisibility(36)
x = [(int(s) % 3 == 0) + (int(s) % 9 == 0) - (int(s) % 2 == 0) - (int(s) % 4 == 0)
     for s in L.labels]
c = leftmost_chain_coloring(L, Embedding.from_x(L, x))
print("\nL_36 leftmost chain, red:", [L.label(v) for v in red_points(c)])
g = grid(3, 3)
c = leftmost_chain_coloring(g, grid_embedding(g))
print("4x4 grid leftmost chain, red:", [g.label(v) for v in red_points(c)])

p = gen_chain_sum([(20, 3)])
print("\ntwenty 3-chains: poset chi_D =", distinguishing_chromatic_number(p))
edges = comparability_edges(p)
for k in (5, 6):
    found = graph_distinguishing_coloring(p.n, edges, k, proper=True) is not None
    print(f"  comparability graph with {k} colors:", "yes" if found else "no")
