"""K_k edge-decomposition engines.

``exact_decompose`` is the desk-scale terminal solver: complete
backtracking over the lexicographically first uncovered edge.  A completed
search returning no decomposition is a proof that none exists; running out
of node budget proves nothing and is reported distinctly.

``inductive_decompose`` is the constructive removal procedure: while some
indexed vertex of S still has edges, peel off k-cliques through S (via a
mutual-neighborhood clique when S spans an edge, via a clique factor of a
neighborhood otherwise), then hand the S-free residual to a terminal
decomposer.  The vertices of S lose degree at every step, so the loop
terminates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cliques import find_clique_factor, find_clique_in_mutual_neighborhood
from .core import CliqueDecomposition, is_kk_divisible
from .graphs import DenseGraph, bits, mask_of

DECOMPOSED = "decomposed"
NONE = "none"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class ExactSearchResult:
    status: str  # DECOMPOSED | NONE | BUDGET_EXCEEDED
    decomposition: CliqueDecomposition | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status == DECOMPOSED


class _BudgetExhausted(Exception):
    pass


def exact_decompose(g: DenseGraph, k: int, budget: int | None = None) -> ExactSearchResult:
    """Complete backtracking search for a K_k decomposition of g.

    Branches on the lexicographically first uncovered edge (smallest
    endpoint pair); candidate completions of that edge to a k-clique are
    enumerated in ascending vertex order, so the search tree and the first
    solution found are deterministic.  ``budget`` caps search-tree nodes.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if not is_kk_divisible(g, k):
        return ExactSearchResult(NONE, None, 0)

    n = g.n
    rows = list(g.rows)
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def clique_extensions(cand_mask: int, size: int) -> list[tuple[int, ...]]:
        """All *size*-subsets of cand_mask complete in the residual, ascending."""
        out: list[tuple[int, ...]] = []

        def extend(acc: tuple[int, ...], allowed: int) -> None:
            if len(acc) == size:
                out.append(acc)
                return
            m = allowed
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                if len(acc) + 1 + (m & rows[v]).bit_count() >= size:
                    extend(acc + (v,), m & rows[v])

        extend((), cand_mask)
        return out

    def first_uncovered_edge() -> tuple[int, int] | None:
        for i in range(n):
            m = rows[i] >> (i + 1)
            if m:
                return i, i + 1 + (m & -m).bit_length() - 1
        return None

    def search() -> bool:
        nonlocal nodes
        edge = first_uncovered_edge()
        if edge is None:
            return True
        nodes += 1
        if budget is not None and nodes > budget:
            raise _BudgetExhausted
        x, y = edge
        for ext in clique_extensions(rows[x] & rows[y], k - 2):
            block = (x, y) + ext
            for ai in range(k):
                for bi in range(ai + 1, k):
                    u, v = block[ai], block[bi]
                    rows[u] &= ~(1 << v)
                    rows[v] &= ~(1 << u)
            chosen.append(tuple(sorted(block)))
            if search():
                return True
            chosen.pop()
            for ai in range(k):
                for bi in range(ai + 1, k):
                    u, v = block[ai], block[bi]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
        return False

    try:
        found = search()
    except _BudgetExhausted:
        return ExactSearchResult(BUDGET_EXCEEDED, None, nodes)
    if found:
        return ExactSearchResult(DECOMPOSED, CliqueDecomposition(k, chosen), nodes)
    return ExactSearchResult(NONE, None, nodes)


def exact_terminal(budget: int | None = None):
    """A terminal decomposer closure over a node budget."""

    def terminal(g: DenseGraph, k: int) -> ExactSearchResult:
        return exact_decompose(g, k, budget)

    return terminal


# ----------------------------------------------------------------------
# inductive removal procedure


@dataclass(frozen=True)
class InductiveState:
    """Snapshot of one loop iteration of the inductive procedure."""

    case: str  # "s_edge" | "neighborhood_factor" | "terminal"
    sigma_before: int
    sigma_after: int
    blocks_removed: int
    divisible_after: bool


@dataclass(frozen=True)
class InductiveResult:
    status: str  # DECOMPOSED | "extraction_failed" | NONE | BUDGET_EXCEEDED
    decomposition: CliqueDecomposition | None
    steps: tuple[InductiveState, ...]
    failure: str = ""

    def __bool__(self) -> bool:
        return self.status == DECOMPOSED


def inductive_decompose(g: DenseGraph, k: int, s_sequence, terminal=None) -> InductiveResult:
    """Peel k-cliques through the indexed set S, then terminally decompose the rest.

    While G[S] has an edge, the lexicographically first one (by sequence
    position) is completed to a k-clique through a (k-2)-clique in the
    mutual neighborhood outside S; when G[S] is empty but some S-vertex
    has neighbors, its whole neighborhood is split into a (k-1)-clique
    factor and all those cliques are removed through it.  Once S is
    isolated, S is deleted and the residual goes to *terminal*.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if not is_kk_divisible(g, k):
        raise ValueError("graph is not K_k-divisible")
    seq = list(s_sequence)
    if len(set(seq)) != len(seq) or any(not 0 <= z < g.n for z in seq):
        raise ValueError("S must be a sequence of distinct vertices of g")
    if terminal is None:
        terminal = exact_terminal()

    rows = list(g.rows)
    s_mask = mask_of(seq)
    removed: list[tuple[int, ...]] = []
    steps: list[InductiveState] = []

    def sigma() -> int:
        return sum(rows[z].bit_count() for z in seq)

    def remove_block(block: tuple[int, ...]) -> None:
        for ai in range(k):
            for bi in range(ai + 1, k):
                u, v = block[ai], block[bi]
                if not rows[u] >> v & 1:
                    raise AssertionError(f"block edge ({u},{v}) not present")
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)

    def snapshot() -> DenseGraph:
        return DenseGraph(g.n, rows)

    while True:
        sig = sigma()
        if sig == 0:
            residual_vertices = [v for v in range(g.n) if v not in set(seq)]
            sub, labels = snapshot().induced(residual_vertices)
            outcome = terminal(sub, k)
            if outcome.status != DECOMPOSED:
                return InductiveResult(
                    status=outcome.status,
                    decomposition=None,
                    steps=tuple(steps),
                    failure="terminal decomposer did not decompose the residual",
                )
            mapped = [tuple(labels[v] for v in c) for c in outcome.decomposition.cliques]
            steps.append(InductiveState("terminal", 0, 0, len(mapped), True))
            return InductiveResult(
                status=DECOMPOSED,
                decomposition=CliqueDecomposition(k, removed + mapped),
                steps=tuple(steps),
            )

        s_edge = None
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if rows[seq[i]] >> seq[j] & 1:
                    s_edge = (i, j)
                    break
            if s_edge:
                break

        current = snapshot()
        if s_edge is not None:
            i, j = s_edge
            zi, zj = seq[i], seq[j]
            ext = find_clique_in_mutual_neighborhood(current, zi, zj, seq, k - 2)
            if ext is None:
                return InductiveResult(
                    status="extraction_failed",
                    decomposition=None,
                    steps=tuple(steps),
                    failure=f"no K_{k - 2} in the mutual neighborhood of S-edge ({zi},{zj}) outside S",
                )
            block = tuple(sorted((zi, zj) + ext))
            remove_block(block)
            removed.append(block)
            case, count = "s_edge", 1
        else:
            z = next(z for z in seq if rows[z])
            nbrs = list(bits(rows[z]))
            if len(nbrs) % (k - 1) != 0:
                raise AssertionError("neighborhood size not divisible by k-1 in a divisible graph")
            sub, labels = current.induced(nbrs)
            factor = find_clique_factor(sub, k - 1)
            if factor is None:
                return InductiveResult(
                    status="extraction_failed",
                    decomposition=None,
                    steps=tuple(steps),
                    failure=f"no K_{k - 1}-factor of the neighborhood of S-vertex {z}",
                )
            count = 0
            for part in factor:
                block = tuple(sorted((z,) + tuple(labels[v] for v in part)))
                remove_block(block)
                removed.append(block)
                count += 1
            case = "neighborhood_factor"

        new_sig = sigma()
        divisible = is_kk_divisible(DenseGraph(g.n, rows), k)
        steps.append(InductiveState(case, sig, new_sig, count, divisible))
        if new_sig >= sig:
            raise AssertionError("sigma did not decrease")
        if not divisible:
            raise AssertionError("divisibility broken by a removal step")


# ----------------------------------------------------------------------
# hypothesis derivation and checking for the inductive route


def derive_low_degree_set(g: DenseGraph, k: int, gamma: Fraction) -> list[int]:
    """Vertices whose complement degree is at least gamma*n/2.

    Ordered by descending complement degree, then lowest index.  All
    threshold comparisons are exact rational cross-multiplications.
    """
    gamma = Fraction(gamma)
    if not 0 < gamma < 1:
        raise ValueError(f"gamma must be in (0,1), got {gamma}")
    n = g.n
    comp_deg = [n - 1 - row.bit_count() for row in g.rows]
    selected = [v for v in range(n) if 2 * gamma.denominator * comp_deg[v] >= gamma.numerator * n]
    return sorted(selected, key=lambda v: (-comp_deg[v], v))


@dataclass(frozen=True)
class Lemma4Check:
    ok: bool
    edge_count_ok: bool
    violating_edges: tuple[tuple[int, int], ...]


def check_lemma4_hypotheses(g: DenseGraph, k: int, gamma: Fraction) -> Lemma4Check:
    """Dense-with-many-triangles hypothesis: edge bound plus per-edge mutual neighborhoods.

    Requires |E| >= (1 - gamma^2/(4k)) * C(n,2) and |N(x,y)| > k*gamma*n
    for every edge xy; violating edges are listed.
    """
    gamma = Fraction(gamma)
    p, q = gamma.numerator, gamma.denominator
    n = g.n
    edge_ok = 4 * k * q * q * g.num_edges() >= (4 * k * q * q - p * p) * comb(n, 2)
    bad = tuple(
        (x, y)
        for x, y in g.edges()
        if q * g.mutual_neighbors_mask(x, y).bit_count() <= k * p * n
    )
    return Lemma4Check(ok=edge_ok and not bad, edge_count_ok=edge_ok, violating_edges=bad)


@dataclass(frozen=True)
class Lemma3Check:
    ok: bool
    # each violation: (condition, vertices) with condition in {"i", "ii", "iii"}
    violations: tuple[tuple[str, tuple[int, ...]], ...]


def preceding_edge_count(g: DenseGraph, seq: list[int], i: int, j: int) -> int:
    """Edges of G[S] adjacent to the S-edge (seq[i], seq[j]) that lexicographically precede it."""
    zi, zj = seq[i], seq[j]
    before_j = mask_of(seq[:j])
    before_i = mask_of(seq[:i])
    return (g.rows[zi] & before_j).bit_count() + (g.rows[zj] & before_i).bit_count()


def check_lemma3_hypotheses(g: DenseGraph, k: int, s_sequence, gamma: Fraction) -> Lemma3Check:
    """Literal evaluation of the three inductive-procedure conditions.

    (i) every outside vertex keeps |N(x)\\S| >= (1-gamma)n + (k-2)|N(x) & S|;
    (ii) every S-vertex is isolated or has |N(z)\\S| > (k-1)*gamma*n + (k-2)|N(z) & S|;
    (iii) every S-edge, in sequence order, has mutual neighborhood outside S
    larger than (k-3)*gamma*n + (k-2) * (count of preceding adjacent S-edges).
    """
    gamma = Fraction(gamma)
    p, q = gamma.numerator, gamma.denominator
    seq = list(s_sequence)
    s_mask = mask_of(seq)
    n = g.n
    violations: list[tuple[str, tuple[int, ...]]] = []

    for x in range(n):
        if s_mask >> x & 1:
            continue
        outside = (g.rows[x] & ~s_mask).bit_count()
        inside = (g.rows[x] & s_mask).bit_count()
        if q * outside < (q - p) * n + q * (k - 2) * inside:
            violations.append(("i", (x,)))
    for z in seq:
        if g.rows[z] == 0:
            continue
        outside = (g.rows[z] & ~s_mask).bit_count()
        inside = (g.rows[z] & s_mask).bit_count()
        if q * outside <= (k - 1) * p * n + q * (k - 2) * inside:
            violations.append(("ii", (z,)))
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            zi, zj = seq[i], seq[j]
            if not g.has_edge(zi, zj):
                continue
            mutual = (g.rows[zi] & g.rows[zj] & ~s_mask).bit_count()
            ell = preceding_edge_count(g, seq, i, j)
            if q * mutual <= (k - 3) * p * n + q * (k - 2) * ell:
                violations.append(("iii", (zi, zj)))

    return Lemma3Check(ok=not violations, violations=tuple(violations))
