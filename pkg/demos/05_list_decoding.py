#!/usr/bin/env python3
"""List-decoding radii: the Johnson baseline and the heavy-position
improvement, plus brute-force lists on a desk-size code.

On an almost right-regular graph, positions where many list codewords
disagree with the center concentrate mass; splitting disagreement counts
into heavy and light parts beats the Johnson radius whenever the
distance-to-rate tradeoff leaves room.
"""

import math
from fractions import Fraction

from expander_codes import (
    Word,
    cycle_graph,
    enumerate_list,
    improved_radius,
    johnson_radius,
    min_distance_bruteforce,
    tau_profile,
    threshold_claim_check,
    union_graph,
    vertex_edge_graph,
)

print("Johnson radius r(delta) = (1 - sqrt(1 - 2*delta))/2:")
for delta in (Fraction(18, 100), Fraction(1, 20), Fraction(1, 2)):
    print(f"  r({float(delta)}) = {johnson_radius(delta)}")

print("\nimproved radius vs Johnson, delta = alpha/(2*eps) = 0.05:")
print("  d_max   rho*        johnson     regime")
for d_max in (9, 15, 25, 40, 10**6):
    b = improved_radius(Fraction(1, 20), d_max)
    print(f"  {d_max:6d}  {b.rho_star:.8f}  {b.johnson_r:.8f}  {b.regime}")

rep = threshold_claim_check(Fraction(1, 100), Fraction(1, 10), d_max=33, d_r=30)
print("\nthreshold chain at alpha=0.01, eps=0.1, d_max=33, d_r=30:")
for c in rep.conditions:
    print(f"  gate {c.name}: {'holds' if c.holds else 'fails'}")
print(f"  johnson below 0.53*delta: {rep.johnson_below.holds} "
      f"(margin {float(rep.johnson_below.margin):.4g})")
print(f"  theta above 0.544*delta: {rep.theta_above.holds} "
      f"(margin {float(rep.theta_above.margin):.4g})")

# Brute-force lists around a center. Below half the distance every list is
# a singleton; at the ambiguity boundary the disagreement profile appears.
g = union_graph(vertex_edge_graph(cycle_graph(3)), vertex_edge_graph(cycle_graph(3)))
d = min_distance_bruteforce(g).distance
radius = math.floor(0.54 * d)
assert radius < math.ceil(d / 2)
singleton = max(
    len(enumerate_list(g, Word(g.n_left, bits), radius))
    for bits in range(1 << g.n_left)
)
print(f"\ntwo-triangle code: distance {d}; at radius {radius} every list has "
      f"size <= {singleton}")

tri3 = vertex_edge_graph(cycle_graph(3))
y = Word.from_support(3, [0])
lst = enumerate_list(tri3, y, 2)
print(f"\nTRI3 center {y} at radius 2: list {[str(w) for w in lst]}")
prof = tau_profile(tri3, y, lst)
print(f"tau = {prof.tau}, heavy positions {prof.heavy} at threshold "
      f"{prof.theta}*L")
print(f"triples: {prof.triple_count} >= C(L,2)*d = {prof.triple_lower_bound}")
print(f"odd-neighbor set identical across the list: {prof.gamma_odd_consistent}")
