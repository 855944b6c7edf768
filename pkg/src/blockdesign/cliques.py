"""Exact clique and clique-factor extraction on small dense graphs.

These back the two classical existence guarantees used by the
decomposition procedures: an edge count above (r-2)/(2r-2) * n^2 forces an
r-clique, and minimum degree at least (r-1)/r * n with r | n forces an
r-clique factor.  The searches are exact, not heuristic, so a ``None``
answer is a proof of absence; this doubles as the enumeration oracle for
tests.  Swap-in point: a polynomial-time factor finder could replace the
backtracking here without touching callers.
"""

from __future__ import annotations

from collections import deque

from .graphs import DenseGraph, bits, mask_of


def find_clique(g: DenseGraph, r: int) -> tuple[int, ...] | None:
    """An r-clique of g, or None if there is none (exact search).

    Descends into candidate vertices ordered by descending degree then
    lowest index, with full backtracking, so the first clique found is
    deterministic.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return ()
    if r == 1:
        return (0,) if g.n else None
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    rows = g.rows

    def descend(acc: list[int], cand: int, start: int) -> tuple[int, ...] | None:
        if len(acc) == r:
            return tuple(sorted(acc))
        if len(acc) + cand.bit_count() < r:
            return None
        for idx in range(start, g.n):
            v = order[idx]
            if cand >> v & 1:
                found = descend(acc + [v], cand & rows[v], idx + 1)
                if found is not None:
                    return found
        return None

    return descend([], (1 << g.n) - 1, 0)


def find_clique_in_mutual_neighborhood(
    g: DenseGraph, x: int, y: int, exclude, r: int
) -> tuple[int, ...] | None:
    """An r-clique inside N(x) & N(y) minus *exclude*, or None.

    r = 0 returns the empty tuple (the k=3 case needs no extra vertices).
    """
    if not g.has_edge(x, y):
        raise ValueError(f"({x},{y}) is not an edge")
    if r == 0:
        return ()
    allowed = g.mutual_neighbors_mask(x, y) & ~mask_of(exclude)
    sub, labels = g.induced(bits(allowed))
    found = find_clique(sub, r)
    if found is None:
        return None
    return tuple(labels[v] for v in found)


# ----------------------------------------------------------------------
# maximum matching (Edmonds blossom), used for the r = 2 factor case


def maximum_matching(g: DenseGraph) -> list[int]:
    """Maximum-cardinality matching; returns mate[v] (-1 if unmatched).

    Standard O(V^3) blossom contraction with fixed scan order, so the
    result is deterministic.
    """
    n = g.n
    mate = [-1] * n
    for v in range(n):  # greedy seed
        if mate[v] == -1:
            for u in bits(g.rows[v]):
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def augment_from(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        queue = deque([root])
        in_queue[root] = True
        while queue:
            v = queue.popleft()
            for to in bits(g.rows[v]):
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        while to != -1:  # flip the augmenting path
                            prev = parent[to]
                            nxt = mate[prev]
                            mate[to] = prev
                            mate[prev] = to
                            to = nxt
                        return True
                    if not in_queue[mate[to]]:
                        in_queue[mate[to]] = True
                        queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            augment_from(v)
    return mate


# ----------------------------------------------------------------------
# clique factors


def find_clique_factor(g: DenseGraph, r: int) -> list[tuple[int, ...]] | None:
    """Partition of V(g) into r-cliques, or None if impossible (exact).

    r = 2 reduces to a perfect matching via :func:`maximum_matching`; for
    r >= 3 the search backtracks on the lowest-index uncovered vertex,
    trying (r-1)-subsets of its uncovered neighborhood ordered by
    descending degree then lowest index, with a degree feasibility prune.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if g.n % r != 0:
        raise ValueError(f"|V| = {g.n} is not divisible by r = {r}")
    if r == 1:
        return [(v,) for v in range(g.n)]
    if r == 2:
        mate = maximum_matching(g)
        if any(m == -1 for m in mate):
            return None
        return sorted({(min(v, m), max(v, m)) for v, m in enumerate(mate)})

    deg = g.degrees()
    rows = g.rows
    order_key = lambda v: (-deg[v], v)

    def subsets(cand_mask: int, size: int):
        """Cliques of the given size inside cand_mask, candidates by (-deg, index)."""
        cands = sorted(bits(cand_mask), key=order_key)

        def extend(acc: list[int], start: int, allowed: int):
            if len(acc) == size:
                yield tuple(acc)
                return
            if len(acc) + allowed.bit_count() < size:
                return
            for idx in range(start, len(cands)):
                v = cands[idx]
                if allowed >> v & 1:
                    yield from extend(acc + [v], idx + 1, allowed & rows[v])

        yield from extend([], 0, cand_mask)

    def backtrack(uncovered: int) -> list[tuple[int, ...]] | None:
        if uncovered == 0:
            return []
        m = uncovered
        while m:  # feasibility: every uncovered vertex keeps >= r-1 uncovered neighbors
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if (rows[v] & uncovered).bit_count() < r - 1:
                return None
        v = (uncovered & -uncovered).bit_length() - 1
        for group in subsets(rows[v] & uncovered, r - 1):
            rest = backtrack(uncovered & ~mask_of(group) & ~(1 << v))
            if rest is not None:
                return [tuple(sorted((v,) + group))] + rest
        return None

    result = backtrack((1 << g.n) - 1)
    return None if result is None else sorted(result)
