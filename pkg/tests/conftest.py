"""Shared fixtures: hand-checkable tiny graphs and scanned expander instances."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import pytest

from expander_codes import (
    BipartiteGraph,
    ExpanderParams,
    cycle_graph,
    gen_left_regular,
    measure_profile,
    min_distance_bruteforce,
    nullspace,
    vertex_edge_graph,
    verify_expander,
)


def tri3_graph() -> BipartiteGraph:
    return vertex_edge_graph(cycle_graph(3))


def cyc_graph(length: int) -> BipartiteGraph:
    return vertex_edge_graph(cycle_graph(length))


@pytest.fixture(scope="session")
def tri3() -> BipartiteGraph:
    return tri3_graph()


def gen_four_cycle_free(
    n: int, m: int, d: int, seed: int, tries_per_vertex: int = 200, restarts: int = 50
) -> BipartiteGraph | None:
    """Left-regular graph where no two left vertices share two checks, by
    randomized check-pair packing; None when the packing fails."""
    rng = random.Random(seed)
    for _ in range(restarts):
        used: set[tuple[int, int]] = set()
        adj = []
        ok = True
        for _ in range(n):
            placed = False
            for _ in range(tries_per_vertex):
                row = tuple(sorted(rng.sample(range(m), d)))
                pairs = set(itertools.combinations(row, 2))
                if pairs & used:
                    continue
                used |= pairs
                adj.append(row)
                placed = True
                break
            if not placed:
                ok = False
                break
        if ok:
            return BipartiteGraph(n, m, d, tuple(adj))
    return None


@dataclass(frozen=True)
class Instance:
    """An exhaustively verified tiny expander with its exact parameters."""

    graph: BipartiteGraph
    params: ExpanderParams
    eps: Fraction  # measured: the smallest eps the profile certifies
    alpha_n: int
    distance: int


def _measured_instance(g: BipartiteGraph, alpha_n: int) -> Instance | None:
    prof = measure_profile(g, alpha_n)
    eps = prof.measured_eps()
    if not 0 < eps < Fraction(1, 2):
        return None
    params = ExpanderParams(Fraction(alpha_n, g.n_left), eps)
    assert verify_expander(g, params).passed
    dist = min_distance_bruteforce(g).distance if nullspace(g).dimension else 0
    return Instance(g, params, eps, alpha_n, dist)


# pinned (n, m, seed) triples for gen_four_cycle_free with d=3: every pinned
# instance is re-checked by the predicates below, not trusted
_DECODE_INSTANCE_KEYS = [
    (12, 9, 0),
    (12, 10, 25),
    (14, 11, 21),
    (15, 11, 24),
    (15, 12, 0),
    (16, 12, 1),
    (16, 13, 1),
]


@pytest.fixture(scope="session")
def decode_instances() -> list[Instance]:
    """Verified expanders with measured eps = 1/6 < 1/4 and distance 6,
    clearing both the flip-decoder target radius and the erasure budget."""
    out = []
    for n, m, seed in _DECODE_INSTANCE_KEYS:
        g = gen_four_cycle_free(n, m, 3, seed)
        assert g is not None
        inst = _measured_instance(g, alpha_n=2)
        assert inst is not None
        assert 0 < inst.eps < Fraction(1, 4)
        assert inst.distance >= 6
        out.append(inst)
    return out


# GF(4) multiplication for the order-4 affine plane
_GF4_MUL = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def dual_affine_plane_4() -> BipartiteGraph:
    """Lines of the order-4 affine plane as left vertices, points as checks;
    any two lines share at most one point."""
    lines = []
    for m in range(4):
        for b in range(4):
            lines.append(tuple(sorted(4 * x + (_GF4_MUL[m][x] ^ b) for x in range(4))))
    for c in range(4):
        lines.append(tuple(sorted(4 * c + y for y in range(4))))
    return BipartiteGraph(20, 16, 4, tuple(lines))


@pytest.fixture(scope="session")
def guess_expansion_instance() -> Instance:
    """Shortened dual plane: drop lines off min-weight codewords until the
    distance clears 7. Lands at N=10, distance 8, measured eps = 1/8."""
    g = dual_affine_plane_4()
    lines = list(g.adj)
    while True:
        g = BipartiteGraph(len(lines), 16, 4, tuple(lines))
        if nullspace(g).dimension == 0:
            raise AssertionError("shortening emptied the code")
        res = min_distance_bruteforce(g)
        if res.distance >= 7:
            break
        drop = res.witness.support()[0]
        del lines[drop]
    inst = _measured_instance(g, alpha_n=2)
    assert inst is not None
    assert inst.eps <= Fraction(1, 8)
    return inst


def random_verified_instances(
    count: int, *, alpha_ns=(2, 3), n_lo=8, n_hi=12, seeds=range(200)
) -> list[Instance]:
    """Deterministic scan of random left-regular graphs, keeping those whose
    full exhaustive profile certifies some eps in (0, 1/2) at integer
    alpha*N >= 2."""
    out = []
    for seed in seeds:
        n = n_lo + seed % (n_hi - n_lo + 1)
        m = n - 2 - seed % 2
        d = 3 + seed % 2
        g = gen_left_regular(n, m, d, seed)
        prof = measure_profile(g, n)
        for alpha_n in alpha_ns:
            eps = max(
                1 - Fraction(prof.min_at(s), d * s) for s in range(1, alpha_n + 1)
            )
            if not 0 < eps < Fraction(1, 2):
                continue
            params = ExpanderParams(Fraction(alpha_n, n), eps)
            dist = min_distance_bruteforce(g).distance if nullspace(g).dimension else 0
            out.append(Instance(g, params, eps, alpha_n, dist))
            if len(out) >= count:
                return out
    raise AssertionError(f"scan exhausted with {len(out)} < {count} instances")
