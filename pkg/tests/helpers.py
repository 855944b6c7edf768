"""Shared samplers and brute-force oracles for the test suite.

Every randomized test seeds its own ``random.Random`` so runs are
reproducible; the oracles here are deliberately naive enumerations,
independent of the library's search code paths.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from blockdesign.core import PartialDesign
from blockdesign.graphs import DenseGraph

FANO_BLOCKS = [
    [0, 1, 2],
    [0, 3, 4],
    [0, 5, 6],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 6],
    [2, 4, 5],
]


def random_graph(n, rng, density=0.5) -> DenseGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return DenseGraph.from_edges(n, edges)


def random_k3_divisible(n, rng, density=0.5) -> DenseGraph:
    """Random graph repaired to even degrees and edge count = 0 mod 3.

    Parity repair toggles the edge between paired odd-degree vertices;
    edge-count repair toggles triangles, which preserves degree parity.
    """
    rows = [0] * n

    def toggle(u, v):
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u

    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                toggle(i, j)
    odd = [v for v in range(n) if rows[v].bit_count() % 2]
    rng.shuffle(odd)
    for i in range(0, len(odd), 2):
        toggle(odd[i], odd[i + 1])
    edges = sum(r.bit_count() for r in rows) // 2
    need = (-edges) % 3
    stall = 0
    while need:
        u, v, w = rng.sample(range(n), 3)
        e = (rows[u] >> v & 1) + (rows[u] >> w & 1) + (rows[v] >> w & 1)
        if e % 3 == need:  # toggling all three pairs changes the count by 3-2e = e mod 3
            toggle(u, v)
            toggle(u, w)
            toggle(v, w)
            edges += 3 - 2 * e
            need = (-edges) % 3
            stall = 0
        else:
            stall += 1
            if stall > 200 and e in (0, 3):
                # near-complete or near-empty graphs may lack a fixing triple;
                # toggling a uniform one keeps parity and reshuffles the state
                toggle(u, v)
                toggle(u, w)
                toggle(v, w)
                edges += 3 - 2 * e
                stall = 0
    return DenseGraph(n, rows)


def random_partial_design(n, k, max_blocks, rng) -> PartialDesign:
    """Random valid partial design with between 0 and max_blocks blocks."""
    blocks = []
    covered = set()
    target = rng.randint(0, max_blocks)
    attempts = 0
    while len(blocks) < target and attempts < 50 * (target + 1):
        attempts += 1
        block = tuple(sorted(rng.sample(range(n), k)))
        pairs = [(block[i], block[j]) for i in range(k) for j in range(i + 1, k)]
        if any(p in covered for p in pairs):
            continue
        covered.update(pairs)
        blocks.append(block)
    return PartialDesign(n, k, blocks)


# ----------------------------------------------------------------------
# naive oracles


def brute_has_clique(g: DenseGraph, r: int) -> bool:
    return any(g.is_clique(c) for c in itertools.combinations(range(g.n), r))


def brute_clique_factor_exists(g: DenseGraph, r: int) -> bool:
    """Enumerate all partitions of the vertex set into r-sets."""
    verts = tuple(range(g.n))

    def rec(remaining: tuple[int, ...]) -> bool:
        if not remaining:
            return True
        v = remaining[0]
        rest = remaining[1:]
        for group in itertools.combinations(rest, r - 1):
            cell = (v,) + group
            if g.is_clique(cell):
                left = tuple(x for x in rest if x not in group)
                if rec(left):
                    return True
        return False

    return rec(verts)


def brute_max_matching_size(g: DenseGraph) -> int:
    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        v = 0
        while v < g.n and not mask >> v & 1:
            v += 1
        if v == g.n:
            return 0
        res = best(mask & ~(1 << v))
        for u in range(v + 1, g.n):
            if mask >> u & 1 and g.has_edge(v, u):
                res = max(res, 1 + best(mask & ~(1 << v) & ~(1 << u)))
        return res

    return best((1 << g.n) - 1)


def brute_equitable_partitions(g: DenseGraph, a: int, k: int):
    """All partitions into a classes of size k-1 that are proper (independent)."""
    verts = list(range(g.n))

    def rec(remaining):
        if not remaining:
            yield []
            return
        v = remaining[0]
        rest = remaining[1:]
        for group in itertools.combinations(rest, k - 2):
            cell = (v,) + group
            if g.is_independent(cell):
                left = [x for x in rest if x not in group]
                for tail in rec(left):
                    yield [cell] + tail

    yield from rec(verts)
