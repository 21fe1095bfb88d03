"""Proper distinguishing colorings of Boolean and divisor lattices against
the exhaustive optimum where that is still cheap."""
import time

from posetdist import (DivisibilitySpec, boolean_coloring, boolean_recolor_sets,
                       distinguishing_chromatic_number, divisibility_coloring, gen_boolean,
                       gen_divisibility, is_distinguishing, is_proper, new_colors_needed,
                       plan_divisibility_coloring, rook_count)

print(" n  construction  n+3  exact")
for n in range(1, 9):
    B = gen_boolean(n)
    c = boolean_coloring(n)
    assert is_proper(B, c) and is_distinguishing(B, c)
    exact = ""
    if n <= 4:
        t = time.perf_counter()
        exact = f"{distinguishing_chromatic_number(B)} ({time.perf_counter() - t:.1f}s)"
    print(f"{n:>2}  {c.num_colors:>12}  {n + 3:>3}  {exact}")

a, b = boolean_recolor_sets(7)
print("\nn = 7, color a:", [sorted(s) for s in a])
print("n = 7, color b:", [sorted(s) for s in b])

print("\nrook counts for a 5-chain:", [rook_count(5, m) for m in range(4)])
print("31 chains of length 5 need", new_colors_needed(31, 5), "new colors")

for n in (12, 60, 210, 900, 2310):
    spec = DivisibilitySpec.from_int(n)
    L = gen_divisibility(spec)
    c = divisibility_coloring(spec)
    m = plan_divisibility_coloring(spec).new_colors
    ok = is_proper(L, c) and is_distinguishing(L, c)
    print(f"L_{n}: {L.n} points, m = {m}, {c.num_colors} colors, verified={ok}")
