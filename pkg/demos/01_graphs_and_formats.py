#!/usr/bin/env python3
"""Building blocks: left-regular bipartite graphs and the text format.

Walks through the three construction routes (vertex-edge graphs of plain
regular graphs, uniform left-regular sampling, biregular stub matching),
disjoint unions, and serialization.
"""

from expander_codes import (
    cycle_graph,
    complete_graph,
    gen_biregular,
    gen_left_regular,
    load,
    store,
    union_graph,
    vertex_edge_graph,
)

# The vertex-edge graph of the 3-cycle: bits on the triangle's vertices,
# one parity check per edge. Check i couples bits i and i+1 mod 3, so the
# only codewords are 000 and 111.
tri3 = vertex_edge_graph(cycle_graph(3))
print("triangle vertex-edge graph:")
print(f"  N={tri3.n_left} M={tri3.m_right} D={tri3.d_left}")
print(f"  adjacency: {tri3.adj}")
print(f"  average right degree {tri3.d_right_avg}, max {tri3.d_max}")

k4 = vertex_edge_graph(complete_graph(4))
print(f"\nK4 vertex-edge graph: N={k4.n_left} M={k4.m_right} D={k4.d_left}, "
      f"right degrees {set(k4.right_degrees)}")

# Uniform left-regular sampling: each bit picks D distinct checks.
g = gen_left_regular(12, 9, 3, seed=7)
print(f"\nrandom left-regular: N={g.n_left} M={g.m_right} D={g.d_left}")
print(f"  right degrees: {g.right_degrees} (uneven)")

# Stub matching gives every check the same degree N*D/M.
b = gen_biregular(12, 9, 3, seed=7)
print(f"biregular: right degrees {b.right_degrees} (all {12 * 3 // 9})")

# Disjoint unions shift the second block's indices.
u = union_graph(tri3, vertex_edge_graph(cycle_graph(4)))
print(f"\nunion of TRI3 and CYC4: N={u.n_left} M={u.m_right}")
print(f"  block-2 vertex 3 sees checks {u.adj[3]} (shifted into [3, 7))")

# The text format round-trips exactly.
text = store(tri3)
print("\nserialized TRI3:")
print(text, end="")
assert load(text) == tri3
print("round trip ok")
