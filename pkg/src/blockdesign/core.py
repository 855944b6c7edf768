"""Domain types for partial (n,k,1)-designs plus divisibility and bound arithmetic.

A partial (n,k,1)-design is a set of k-element blocks on points 0..n-1 in
which every unordered pair of points lies in at most one block.  All bound
formulas below are exact integer arithmetic; the one half-integer case is
carried as a doubled integer (see ``thm3_edge_bound``).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import DenseGraph, bits


# ----------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class PartialDesign:
    """A (possibly invalid) partial (n,k,1)-design candidate.

    Blocks are stored canonically: each block sorted ascending, block list
    sorted lexicographically.  Use :func:`validate_design` to check the
    design invariants; construction only normalizes.
    """

    n: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, k: int, blocks):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        object.__setattr__(self, "blocks", canon)

    def with_block(self, block) -> "PartialDesign":
        return PartialDesign(self.n, self.k, list(self.blocks) + [tuple(block)])

    def blocks_through(self, point: int) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if point in b]


@dataclass(frozen=True)
class CliqueDecomposition:
    """A set of k-cliques intended to partition the edge set of some graph."""

    k: int
    cliques: tuple[tuple[int, ...], ...]

    def __init__(self, k: int, cliques):
        object.__setattr__(self, "k", k)
        canon = tuple(sorted(tuple(sorted(c)) for c in cliques))
        object.__setattr__(self, "cliques", canon)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BoundReport:
    """All closed-form bounds for one (n, k), with the asymptotic caveat flagged.

    ``thm2_complement_blocks_num/den`` is the exact rational
    (n-1)/(k-1) - (k^2-k-2)/4 in lowest useful form (denominator 4(k-1)).
    ``thm3_edge_bound`` follows the doubled-integer convention of
    :func:`thm3_edge_bound`.  ``proven_regime`` is always False: the
    completion guarantees behind these numbers hold only for sufficiently
    large n and no explicit threshold is known.
    """

    n: int
    k: int
    admissible: bool
    evans_block_bound: int | None
    thm2_complement_blocks_num: int | None
    thm2_complement_blocks_den: int | None
    thm2_edge_bound_value: int | None
    thm3_edge_bound_value: int
    thm3_doubled: bool
    e_of_n_value: int | None
    proven_regime: bool = False


# ----------------------------------------------------------------------
# validation and the leave


def validate_design(d: PartialDesign) -> ValidationResult:
    """Check the two partial-design invariants.

    Violations are reported as a result value naming the offending block or
    pair; nothing is raised.
    """
    if d.k < 2:
        return ValidationResult(False, f"block size k={d.k} must be at least 2")
    if d.n < 1:
        return ValidationResult(False, f"point count n={d.n} must be positive")
    seen_pair: set[tuple[int, int]] = set()
    for block in d.blocks:
        if len(block) != d.k or len(set(block)) != d.k:
            return ValidationResult(False, f"block {list(block)} is not a set of {d.k} distinct points")
        if block[0] < 0 or block[-1] >= d.n:
            return ValidationResult(False, f"block {list(block)} has points outside 0..{d.n - 1}")
        for i in range(d.k):
            for j in range(i + 1, d.k):
                pair = (block[i], block[j])
                if pair in seen_pair:
                    return ValidationResult(False, f"pair {{{pair[0]},{pair[1]}}} occurs in two blocks")
                seen_pair.add(pair)
    return ValidationResult(True)


def leave(d: PartialDesign) -> DenseGraph:
    """The leave graph: edge xy present iff no block contains both x and y."""
    check = validate_design(d)
    if not check:
        raise ValueError(f"invalid design: {check.reason}")
    g = DenseGraph.complete(d.n)
    rows = list(g.rows)
    for block in d.blocks:
        for i in range(d.k):
            for j in range(i + 1, d.k):
                u, v = block[i], block[j]
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
    return DenseGraph(d.n, rows)


def validate_decomposition(g: DenseGraph, dec: CliqueDecomposition) -> ValidationResult:
    """Check that the cliques' edge sets partition E(g) exactly."""
    covered = [0] * g.n
    for clique in dec.cliques:
        if len(clique) != dec.k or len(set(clique)) != dec.k:
            return ValidationResult(False, f"clique {list(clique)} is not {dec.k} distinct vertices")
        for i in range(dec.k):
            for j in range(i + 1, dec.k):
                u, v = clique[i], clique[j]
                if not g.has_edge(u, v):
                    return ValidationResult(False, f"clique edge ({u},{v}) absent from graph")
                if covered[u] >> v & 1:
                    return ValidationResult(False, f"edge ({u},{v}) covered twice")
                covered[u] |= 1 << v
                covered[v] |= 1 << u
    for v in range(g.n):
        if covered[v] != g.rows[v]:
            missing = next(bits(g.rows[v] & ~covered[v]))
            return ValidationResult(False, f"edge ({min(v, missing)},{max(v, missing)}) not covered")
    return ValidationResult(True)


def is_completion(partial: PartialDesign, full: PartialDesign) -> ValidationResult:
    """Check that *full* is a completion of *partial*: a superset design covering every pair exactly once."""
    if full.n != partial.n or full.k != partial.k:
        return ValidationResult(False, "parameters differ")
    check = validate_design(full)
    if not check:
        return check
    if not set(partial.blocks) <= set(full.blocks):
        return ValidationResult(False, "original blocks not contained in completion")
    want = partial.n * (partial.n - 1) // (partial.k * (partial.k - 1))
    if len(full.blocks) != want:
        return ValidationResult(False, f"{len(full.blocks)} blocks, a full design needs {want}")
    return ValidationResult(True)


# ----------------------------------------------------------------------
# divisibility and admissibility


def is_kk_divisible(g: DenseGraph, k: int) -> bool:
    """Necessary conditions for a K_k edge decomposition of g."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if g.num_edges() % comb(k, 2) != 0:
        return False
    return all(row.bit_count() % (k - 1) == 0 for row in g.rows)


def is_k_admissible(n: int, k: int) -> bool:
    """Necessary conditions for an (n,k,1)-design to exist."""
    if k < 2 or n < k:
        raise ValueError(f"need n >= k >= 2, got n={n}, k={k}")
    return n * (n - 1) % (k * (k - 1)) == 0 and (n - 1) % (k - 1) == 0


# ----------------------------------------------------------------------
# closed-form bounds


def evans_block_bound(n: int, k: int) -> int:
    """Largest block count below which every partial design is completable (large n)."""
    if not is_k_admissible(n, k):
        raise ValueError(f"n={n} is not {k}-admissible")
    return (n - 1) // (k - 1) - k + 1


def thm2_edge_bound(n: int, k: int) -> int:
    """Edge threshold for decomposing divisible graphs of order n = 1 mod (k-1).

    Returns C(n,2) - ((n-1)/(k-1))*C(k,2) + (k-2)(k-1)k(k+1)/8, which is the
    exact integer value of C(n,2) - ((n-1)/(k-1) - (k^2-k-2)/4)*C(k,2).
    A divisible graph with strictly more edges is decomposable for large n.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if (n - 1) % (k - 1) != 0:
        raise ValueError(f"need n = 1 mod {k - 1}, got n={n}")
    return comb(n, 2) - (n - 1) // (k - 1) * comb(k, 2) + (k - 2) * (k - 1) * k * (k + 1) // 8


def thm3_edge_bound(n: int, k: int) -> int:
    """Edge threshold for decomposing an arbitrary divisible graph of order n.

    The bound is C(n,2) - n for k = 3 and C(n,2) - n + (k+1)/2 for k >= 4.
    For even k the value is a half-integer; it is then returned doubled
    (always odd, so the encoding is unambiguous).  Every comparison in the
    theorems is strict, so callers can compare 2|E| against the doubled
    value without any rounding policy.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    if k == 3:
        return comb(n, 2) - n
    if k % 2 == 1:
        return comb(n, 2) - n + (k + 1) // 2
    return 2 * (comb(n, 2) - n) + (k + 1)


def thm3_edge_bound_doubled(n: int, k: int) -> int:
    """2x the exact Theorem-3 threshold, integral for every k."""
    b = thm3_edge_bound(n, k)
    return b if k >= 4 and k % 2 == 0 else 2 * b


def exceeds_thm3_bound(num_edges: int, n: int, k: int) -> bool:
    """True iff the strict edge condition |E| > bound holds (exact arithmetic)."""
    return 2 * num_edges > thm3_edge_bound_doubled(n, k)


def e_of_n(n: int) -> int:
    """Maximum complement size e(n) in the k=3 decomposability threshold.

    Any K_3-divisible graph of order n with more than C(n,2) - e(n) edges
    is decomposable (large n), and the value is attained by an explicit
    non-decomposable graph for every n >= 7.
    """
    if n < 7:
        raise ValueError(f"defined for n >= 7, got {n}")
    r = n % 6
    if r in (1, 3):
        return (3 * n - 9) // 2
    if r == 5:
        return (3 * n - 7) // 2
    if r in (2, 4):
        return n + 2
    return n


def bound_report(n: int, k: int) -> BoundReport:
    """Evaluate every closed-form bound that applies to (n, k)."""
    if k < 3:
        raise ValueError("k must be at least 3")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}")
    admissible = is_k_admissible(n, k)
    congruent = (n - 1) % (k - 1) == 0
    return BoundReport(
        n=n,
        k=k,
        admissible=admissible,
        evans_block_bound=evans_block_bound(n, k) if admissible else None,
        thm2_complement_blocks_num=4 * (n - 1) // (k - 1) - (k * k - k - 2) if congruent else None,
        thm2_complement_blocks_den=4 if congruent else None,
        thm2_edge_bound_value=thm2_edge_bound(n, k) if congruent else None,
        thm3_edge_bound_value=thm3_edge_bound(n, k),
        thm3_doubled=(k >= 4 and k % 2 == 0),
        e_of_n_value=e_of_n(n) if k == 3 and n >= 7 else None,
    )
