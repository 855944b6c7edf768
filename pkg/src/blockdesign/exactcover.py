"""Dancing-links exact cover, used as an independent decomposition oracle.

A K_k decomposition of G is an exact cover of E(G) by the edge sets of the
k-cliques of G.  This module formulates and solves that cover with
Knuth-style doubly linked lists and a min-size column heuristic, sharing no
search machinery with ``decompose.exact_decompose``; agreement of the two
on feasibility is a test invariant.
"""

from __future__ import annotations

from itertools import combinations

from .core import CliqueDecomposition
from .graphs import DenseGraph


class _Node:
    __slots__ = ("left", "right", "up", "down", "column", "row_id")

    def __init__(self):
        self.left = self.right = self.up = self.down = self
        self.column: "_Column" | None = None
        self.row_id = -1


class _Column(_Node):
    __slots__ = ("size", "name")

    def __init__(self, name: int):
        super().__init__()
        self.column = self
        self.size = 0
        self.name = name


class DancingLinks:
    """Sparse 0/1 matrix as a torus of linked nodes."""

    def __init__(self, num_columns: int):
        self.header = _Column(-1)
        self.columns: list[_Column] = []
        prev = self.header
        for i in range(num_columns):
            col = _Column(i)
            col.left = prev
            col.right = self.header
            prev.right = col
            self.header.left = col
            self.columns.append(col)
            prev = col
        self.solution: list[int] = []

    def add_row(self, row_id: int, column_indices) -> None:
        first = None
        prev = None
        for ci in column_indices:
            col = self.columns[ci]
            node = _Node()
            node.row_id = row_id
            node.column = col
            node.up = col.up
            node.down = col
            col.up.down = node
            col.up = node
            col.size += 1
            if first is None:
                first = node
            else:
                node.left = prev
                node.right = first
                prev.right = node
                first.left = node
            prev = node

    def _cover(self, col: _Column) -> None:
        col.right.left = col.left
        col.left.right = col.right
        row = col.down
        while row is not col:
            node = row.right
            while node is not row:
                node.down.up = node.up
                node.up.down = node.down
                node.column.size -= 1
                node = node.right
            row = row.down

    def _uncover(self, col: _Column) -> None:
        row = col.up
        while row is not col:
            node = row.left
            while node is not row:
                node.column.size += 1
                node.down.up = node
                node.up.down = node
                node = node.left
            row = row.up
        col.right.left = col
        col.left.right = col

    def solve(self):
        """Yield exact covers as lists of row ids (Algorithm X)."""
        if self.header.right is self.header:
            yield list(self.solution)
            return
        col = self.header.right
        best = col
        while col is not self.header:
            if col.size < best.size:
                best = col
            col = col.right
        if best.size == 0:
            return
        self._cover(best)
        row = best.down
        while row is not best:
            self.solution.append(row.row_id)
            node = row.right
            while node is not row:
                self._cover(node.column)
                node = node.right
            yield from self.solve()
            node = row.left
            while node is not row:
                self._uncover(node.column)
                node = node.left
            self.solution.pop()
            row = row.down
        self._uncover(best)


def first_exact_cover(num_columns: int, rows: list[list[int]]) -> list[int] | None:
    """First exact cover found, or None if the instance is infeasible."""
    dlx = DancingLinks(num_columns)
    for rid, cols in enumerate(rows):
        dlx.add_row(rid, cols)
    for solution in dlx.solve():
        return solution
    return None


def decompose_by_exact_cover(g: DenseGraph, k: int) -> CliqueDecomposition | None:
    """K_k decomposition of g via the exact-cover formulation, or None.

    Unlike the backtracking solver this has no divisibility pre-prune and
    no budget; it always runs the cover search to completion.
    """
    edges = g.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    cliques = [c for c in combinations(range(g.n), k) if g.is_clique(c)]
    rows = [
        [edge_index[(c[i], c[j])] for i in range(k) for j in range(i + 1, k)]
        for c in cliques
    ]
    cover = first_exact_cover(len(edges), rows)
    if cover is None:
        return None
    return CliqueDecomposition(k, [cliques[r] for r in cover])
