#!/usr/bin/env python3
"""The decoder family on one certified instance.

Builds a 4-cycle-free graph (no two bits share two checks, so the measured
expansion defect at pairs is exactly 1/(2D)), certifies it, and runs every
decoder: erasure peeling, parallel flipping, suspect-finding with erasure
fill-in, and the guess-driven decoders that push past one alpha*N of errors.
"""

import itertools
import random
from fractions import Fraction

from expander_codes import (
    ExpanderParams,
    FindConfig,
    Word,
    decode_erasures,
    find_suspects,
    flip_decode_ss,
    format_radii_table,
    guess_flip_decode,
    measure_profile,
    min_distance_bruteforce,
    plant_errors,
    report_radii,
    sample_codeword,
    scaled_guess_flip_decode,
    verify_expander,
    viderman_decode,
    BipartiteGraph,
)


def four_cycle_free(n, m, d, seed, tries=200, restarts=50):
    """Pack check pairs so no two bits share two checks."""
    rng = random.Random(seed)
    for _ in range(restarts):
        used, adj = set(), []
        for _ in range(n):
            for _ in range(tries):
                row = tuple(sorted(rng.sample(range(m), d)))
                pairs = set(itertools.combinations(row, 2))
                if not pairs & used:
                    used |= pairs
                    adj.append(row)
                    break
            else:
                break
        if len(adj) == n:
            return BipartiteGraph(n, m, d, tuple(adj))
    raise RuntimeError("packing failed")


g = four_cycle_free(14, 11, 3, seed=21)
eps = measure_profile(g, 2).measured_eps()
params = ExpanderParams(Fraction(2, g.n_left), eps)
assert verify_expander(g, params).passed
dist = min_distance_bruteforce(g).distance
print(f"instance: N={g.n_left} M={g.m_right} D={g.d_left}, "
      f"measured eps={eps}, distance={dist}")

planted = sample_codeword(g, 9)
print(f"planted codeword: {planted}")

# Erasures: peel checks with one unknown; linear solve when peeling stalls.
masked = Word(g.n_left, planted.bits & ~0b10111, planted.erasures | 0b10111)
out = decode_erasures(g, masked)
print(f"\nerasure decode of {masked}: {out.word} via {out.path}")

# One adversarial flip, four decoders.
y = plant_errors(planted, [4])
print(f"\ncorrupted word (bit 4 flipped): {y}")

trace = find_suspects(g, y, FindConfig.from_delta(eps))
print(f"suspect finding at delta=eps: L={sorted(trace.l_set)}")

for name, run in [
    ("parallel flip", lambda: flip_decode_ss(g, y, 1 - 2 * eps)),
    ("find+erase   ", lambda: viderman_decode(g, y, params, radius=1)),
    ("guess-flip   ", lambda: guess_flip_decode(g, y, params, Fraction(1, 4) - eps)),
    ("scaled guess ", lambda: scaled_guess_flip_decode(g, y, params, Fraction(1, 100))),
]:
    out = run()
    verdict = "recovered" if out.ok and out.word == planted else out.status
    print(f"  {name}: {verdict} (corrected {out.corrected}, radius {out.radius})")

# The guess-flip decoder accepts candidates within (1-eps)*alpha*N of the
# input; the scaled variant trades expansion for radius (1-k eps)*k alpha*N.
print("\nvalidated radii on this instance:")
beta = Fraction(1, 4) - eps
print(f"  guess-flip: (1-eps)*alpha*N = {(1 - eps) * params.alpha * g.n_left}")
k = (Fraction(1, 4) - Fraction(1, 100)) / eps
print(f"  scaled (eta=1/100): k={k}, radius {(1 - k * eps) * k * params.alpha * g.n_left}")

print("\nclosed-form radius table at alpha=0.01:")
for e in (Fraction(1, 20), Fraction(1, 10), Fraction(1, 8), Fraction(1, 5)):
    print(format_radii_table(report_radii(Fraction(1, 100), e)), end="")
