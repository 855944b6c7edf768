"""Equitable coloring engine: greedy along a degeneracy ordering with one-step recoloring.

A single engine serves three different sufficient conditions (the
hypothesis predicates below).  It properly colors a graph H of order
a*(k-1) with a colors so that every color class ends up with exactly k-1
vertices, or returns the full stuck state when the greedy-plus-recolor
step has no legal move.  The engine can succeed on inputs where all three
predicates fail; the predicates only mark inputs where success is
guaranteed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DenseGraph, bits


def ceil_div(p: int, q: int) -> int:
    """Ceiling of p/q for q > 0, correct for negative p (ceil(-1/2) == 0)."""
    return -((-p) // q)


@dataclass(frozen=True)
class ColoringInstance:
    """Graph H of order a*(k-1) to be a-colored with classes of size k-1."""

    graph: DenseGraph
    a: int
    k: int

    def __post_init__(self):
        if self.a < 1 or self.k < 2:
            raise ValueError(f"need a >= 1 and k >= 2, got a={self.a}, k={self.k}")
        if self.graph.n != self.a * (self.k - 1):
            raise ValueError(
                f"graph order {self.graph.n} != a(k-1) = {self.a * (self.k - 1)}"
            )


@dataclass(frozen=True)
class EquitableColoring:
    """Proper coloring whose classes all have size k-1."""

    assignment: tuple[int, ...]
    a: int
    k: int
    recolor_steps: int  # stuck steps resolved by the swap move

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.a)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class ColoringFailure:
    """State at a stuck step with no legal recoloring.

    At this state every candidate vertex (colored with a full, non
    neighboring color) has a neighbor in the class of the chosen swap
    color, so the one-step recolor move cannot proceed.
    """

    step: int
    full_colors: tuple[int, ...]
    neighbor_colors: tuple[int, ...]
    swap_color: int
    partial_assignment: tuple[int, ...]  # -1 for uncolored vertices


def check_equitable(g: DenseGraph, assignment: tuple[int, ...] | list[int], a: int, k: int) -> bool:
    """Validate both invariants: proper and all classes of size exactly k-1."""
    if len(assignment) != g.n:
        return False
    sizes = [0] * a
    for v, c in enumerate(assignment):
        if not 0 <= c < a:
            return False
        sizes[c] += 1
    if any(s != k - 1 for s in sizes):
        return False
    for u, v in g.edges():
        if assignment[u] == assignment[v]:
            return False
    return True


def degeneracy_ordering(g: DenseGraph) -> list[int]:
    """Order v_1..v_n so each v_i has minimum degree in the subgraph on {v_1..v_i}.

    Built by repeatedly deleting a minimum-degree vertex and placing it
    last.  Among tied vertices the highest index is deleted first, so ties
    come out in ascending index order (the empty graph yields 0..n-1).
    """
    n = g.n
    alive = (1 << n) - 1
    order = [0] * n
    for pos in range(n - 1, -1, -1):
        best = -1
        best_deg = n + 1
        m = alive
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (g.rows[v] & alive).bit_count()
            if deg <= best_deg and (deg < best_deg or v > best):
                best, best_deg = v, deg
        order[pos] = best
        alive ^= 1 << best
    return order


def equitable_color(inst: ColoringInstance, debug: bool = False) -> EquitableColoring | ColoringFailure:
    """Run the shared greedy-with-recolor skeleton.

    Vertices are processed along a degeneracy ordering; the first a get
    distinct colors.  For each later vertex v_j, if some color is neither
    full (class size k-1) nor used on an already-colored neighbor of v_j,
    the lowest such color is assigned.  Otherwise the engine picks the
    lowest color c' that is neighboring but not full, and looks for a
    vertex u whose color is full and not neighboring and that has no
    neighbor in the class of c'; v_j takes u's color and u moves to c'.
    All ties break to the lowest index, so the output is deterministic.
    With ``debug`` the legality invariants (no class above k-1, no
    monochromatic edge among colored vertices) are re-validated after
    every step.
    """
    g, a, k = inst.graph, inst.a, inst.k
    n = g.n
    order = degeneracy_ordering(g)
    color = [-1] * n  # by vertex
    class_mask = [0] * a  # bitset of vertices per color
    class_size = [0] * a

    def assert_legal() -> None:
        assert all(s <= k - 1 for s in class_size)
        for x in range(n):
            if color[x] != -1:
                assert not (class_mask[color[x]] & g.rows[x]), "monochromatic edge"

    for i in range(min(a, n)):
        v = order[i]
        color[v] = i
        class_mask[i] |= 1 << v
        class_size[i] = 1
    if debug:
        assert_legal()

    recolors = 0
    for j in range(a, n):
        v = order[j]
        nbr = g.rows[v]
        full = [c for c in range(a) if class_size[c] == k - 1]
        neighboring = [c for c in range(a) if class_mask[c] & nbr]
        blocked = set(full) | set(neighboring)
        free = next((c for c in range(a) if c not in blocked), None)
        if free is not None:
            color[v] = free
            class_mask[free] |= 1 << v
            class_size[free] += 1
            if debug:
                assert_legal()
            continue

        # Stuck: every color is full or neighboring.  Swap move.
        full_set = set(full)
        nbr_set = set(neighboring)
        swap = next((c for c in neighboring if c not in full_set), None)
        if swap is None:  # cannot happen while fewer than a(k-1) vertices are colored
            raise AssertionError("all colors full before the last vertex")
        target_mask = class_mask[swap]
        u = None
        u_color = None
        for c in full:
            if c in nbr_set:
                continue
            for cand in bits(class_mask[c]):
                if not g.rows[cand] & target_mask:
                    if u is None or cand < u:
                        u, u_color = cand, c
                    break  # bits() ascends, later candidates in this class are larger
        if u is None:
            return ColoringFailure(
                step=j,
                full_colors=tuple(full),
                neighbor_colors=tuple(neighboring),
                swap_color=swap,
                partial_assignment=tuple(color),
            )
        recolors += 1
        color[v] = u_color
        color[u] = swap
        class_mask[u_color] = (class_mask[u_color] ^ (1 << u)) | (1 << v)
        class_mask[swap] |= 1 << u
        class_size[swap] += 1
        if debug:
            assert_legal()

    result = EquitableColoring(assignment=tuple(color), a=a, k=k, recolor_steps=recolors)
    if not check_equitable(g, result.assignment, a, k):
        raise AssertionError("engine produced an invalid coloring")
    return result


# ----------------------------------------------------------------------
# hypothesis predicates for the three guarantee regimes


def union_of_cliques(sets, n: int) -> DenseGraph:
    """Graph on 0..n-1 whose edge set is the union of the cliques on *sets*."""
    rows = [0] * n
    for s in sets:
        s = sorted(set(s))
        for i in range(len(s)):
            for j in range(i + 1, len(s)):
                u, v = s[i], s[j]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return DenseGraph(n, rows)


def lemma_colouring_hypothesis(family, a: int, k: int) -> bool:
    """Guarantee regime for H = union of cliques over a sparse block family.

    True iff a >= k-1, the family has at most a-k+1 sets, every set has at
    most k elements, and distinct sets share at most one element.
    """
    if a < k - 1:
        return False
    sets = [frozenset(s) for s in family]
    if len(sets) > a - k + 1:
        return False
    if any(len(s) > k for s in sets):
        return False
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) > 1:
                return False
    return True


def lemma_colouring2_hypothesis(g: DenseGraph, a: int, k: int) -> bool:
    """Guarantee regime based on the degree sum of H.

    True iff a > L and sum(ceil(deg(x)/(k-1))) < k(a - L) where
    L = (k^2-k-2)/4.  L is a quarter-integer, so both comparisons are done
    on values multiplied by 4.
    """
    if g.n != a * (k - 1):
        raise ValueError(f"graph order {g.n} != a(k-1) = {a * (k - 1)}")
    four_ell = k * k - k - 2
    if 4 * a <= four_ell:
        return False
    total = sum(ceil_div(row.bit_count(), k - 1) for row in g.rows)
    return 4 * total < k * (4 * a - four_ell)


def lemma_colouring3_hypothesis(g: DenseGraph, a: int, k: int) -> bool:
    """Guarantee regime for nearly-linear degree sums, with a wider k=3 branch.

    True iff sum(ceil((deg(x)-1)/(k-1))) <= a-2, or k = 3 with maximum
    degree at most 2a-2 and the same sum at most a.  Isolated vertices
    contribute ceil(-1/(k-1)) = 0 to the sum.
    """
    if g.n != a * (k - 1):
        raise ValueError(f"graph order {g.n} != a(k-1) = {a * (k - 1)}")
    if a < 1:
        return False
    total = sum(ceil_div(row.bit_count() - 1, k - 1) for row in g.rows)
    if total <= a - 2:
        return True
    return k == 3 and g.max_degree() <= 2 * a - 2 and total <= a
