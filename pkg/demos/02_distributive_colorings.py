"""Three colorings of the ten-point distributive lattice whose
join-irreducibles are a < b, a < c and an isolated d."""
from posetdist import (birkhoff_check, distinguishing_chromatic_number, improved_qcoloring,
                       is_distinguishing, is_proper, linear_extension_coloring,
                       rank_plus_qcoloring, red_points, ten_point_lattice)

L = ten_point_lattice()
ok, f = birkhoff_check(L)
name = {L.index_of(w): s for w, s in (("w1", "a"), ("w2", "d"), ("w4", "b"), ("w5", "c"))}


def show(tag, c):
    classes = ["{" + ",".join(L.label(x) for x in cls) + "}" for cls in c.classes()]
    print(f"{tag}: {c.num_colors} colors, proper={is_proper(L, c)}, "
          f"distinguishing={is_distinguishing(L, c)}")
    print("   ", " ".join(f"{c.name(k)}={s}" for k, s in enumerate(classes)))


# Two colors suffice: color a chain of downsets red along a linear extension.
ext = [L.index_of(w) for w in ("w2", "w1", "w4", "w5")]
print("extension:", " < ".join(name[x] for x in ext))
c = linear_extension_coloring(L, ext)
print("red:", [L.label(x) for x in red_points(c)])
show("two-coloring", c)

k, qc = distinguishing_chromatic_number(f.q, witness=True)
print(f"\nchi_D(Q_L) = {k}, |Q_L| = {f.q.n}")
show("rank + Q colors", rank_plus_qcoloring(L, qc))
show("improved", improved_qcoloring(L, qc))
print("exhaustive chi_D(L) =", distinguishing_chromatic_number(L))
