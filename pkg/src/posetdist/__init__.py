"""Distinguishing colorings of finite posets and lattices.

Exact search for the distinguishing number D and the distinguishing
chromatic number chi_D, plus the explicit colorings known for distributive,
divisibility, Boolean and planar lattices.
"""
from .colorings import (DivisibilityPlan, Embedding, boolean_coloring, boolean_recolor_sets,
                        check_embedding, divisibility_coloring, grid_embedding,
                        improved_qcoloring, is_rank_connected, leftmost_chain_coloring,
                        linear_extension_coloring, new_colors_needed,
                        plan_divisibility_coloring, rank_plus_qcoloring, red_points,
                        rook_count, twins)
from .errors import *  # noqa: F401,F403
from .families import (DivisibilitySpec, antichain, chain, gen_boolean, gen_chain_sum,
                       gen_divisibility, gen_downset, grid, pentagon, pentagon_minus_x,
                       standard_example, ten_point_lattice)
from .lattice import (BirkhoffMap, DownsetLattice, MeetJoinTables, birkhoff_check,
                      downset_lattice, join_decomposition, join_irreducibles, meet_join)
from .poset import (Poset, RankData, chain_partition, dual, from_cover_pairs, height,
                    induced, is_comparable, is_linear_extension, linear_extensions,
                    rank_data, width)
from .symmetry import (AutReport, Coloring, automorphisms, chain_proper_distinguishing_number,
                       color_automorphism, comparability_edges, dilworth_coloring,
                       distinguishing_chromatic_number, distinguishing_number,
                       find_distinguishing_coloring, graph_distinguishing_coloring,
                       is_automorphism, is_chain_proper, is_distinguishing, is_isomorphic,
                       is_proper, isomorphism, min_color_class_size, pinned_points)

__version__ = "0.1.0"
