"""Dense graphs with per-vertex bitset adjacency rows.

Vertices are 0..n-1.  Each adjacency row is a Python int used as a bitset,
which keeps neighborhood intersections and degree counts cheap at the
desk scales this library targets (n up to a few thousand).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class DenseGraph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    The adjacency relation is symmetric and irreflexive; ``rows[v]`` is the
    bitset of neighbors of ``v``.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: list[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in bits(rows[v]):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = tuple(rows)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def empty(cls, n: int) -> "DenseGraph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "DenseGraph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "DenseGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # ------------------------------------------------------------------
    # queries

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def mutual_neighbors_mask(self, u: int, v: int) -> int:
        return self.rows[u] & self.rows[v]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, lexicographically sorted."""
        out = []
        for i in range(self.n):
            for j in bits(self.rows[i] >> (i + 1)):
                out.append((i, i + 1 + j))
        return out

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.rows), default=0)

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.rows), default=0)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))

    # ------------------------------------------------------------------
    # derived graphs

    def complement(self) -> "DenseGraph":
        full = (1 << self.n) - 1
        return DenseGraph(self.n, [full ^ row ^ (1 << v) for v, row in enumerate(self.rows)])

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "DenseGraph":
        rows = list(self.rows)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise ValueError(f"edge ({u},{v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return DenseGraph(self.n, rows)

    def induced(self, vertices: Iterable[int]) -> tuple["DenseGraph", list[int]]:
        """Induced subgraph on *vertices*; returns (graph, old labels in new order).

        New vertex i corresponds to old vertex ``labels[i]``; labels ascend.
        """
        labels = sorted(set(vertices))
        index = {old: new for new, old in enumerate(labels)}
        rows = [0] * len(labels)
        for new, old in enumerate(labels):
            for u in bits(self.rows[old]):
                if u in index:
                    rows[new] |= 1 << index[u]
        return DenseGraph(len(labels), rows), labels

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DenseGraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"DenseGraph(n={self.n}, edges={self.num_edges()})"
