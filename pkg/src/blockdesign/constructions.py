"""Extremal constructions that sit exactly at the completion/decomposition bounds.

Each generator builds its object with canonical labels (the special vertex
z is 0, cliques fill ascending point ranges) and returns it together with
an :class:`ObstructionCertificate`, a compact witness whose validity
implies by a counting argument that no completion or K_k decomposition
exists.  ``verify_certificate`` checks a certificate literally against a
target and never consults a solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import PartialDesign, is_k_admissible, is_kk_divisible, leave, validate_design
from .graphs import DenseGraph, bits, mask_of

STAR_OBSTRUCTION = "star_obstruction"
FORCED_BLOCK = "forced_block"


@dataclass(frozen=True)
class ObstructionCertificate:
    """Witness of non-completability / non-decomposability.

    star_obstruction: the blocks or cliques forced through z by the set A0
    exceed z's remaining quota.  forced_block: z has degree exactly k-1 so
    its closed neighborhood must form one block, but that set is not a
    clique.
    """

    kind: str
    z: int
    a0: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (STAR_OBSTRUCTION, FORCED_BLOCK):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if self.kind == STAR_OBSTRUCTION and self.a0 is None:
            raise ValueError("star_obstruction requires the set A0")
        if self.kind == FORCED_BLOCK and self.a0 is not None:
            raise ValueError("forced_block carries no A0")


# ----------------------------------------------------------------------
# generators


def construct_uncompletable_design(n: int, k: int) -> tuple[PartialDesign, ObstructionCertificate]:
    """The minimum uncompletable partial design: (n-1)/(k-1) - k + 2 blocks.

    (n-1)/(k-1) - k + 1 blocks pass through z = 0 and meet pairwise only in
    z; one further block A0 is disjoint from everything.  Any completion
    would need k new blocks through z but z has only k-1 left in its quota.
    """
    if not is_k_admissible(n, k):
        raise ValueError(f"n={n} is not {k}-admissible")
    if n < (k - 1) ** 2 + 1:
        raise ValueError(f"need n >= (k-1)^2+1 = {(k - 1) ** 2 + 1}, got {n}")
    through = (n - 1) // (k - 1) - k + 1
    blocks = []
    point = 1
    for _ in range(through):
        blocks.append((0,) + tuple(range(point, point + k - 1)))
        point += k - 1
    a0 = tuple(range(point, point + k))
    blocks.append(a0)
    design = PartialDesign(n, k, blocks)
    assert validate_design(design)
    assert len(design.blocks) == (n - 1) // (k - 1) - k + 2
    cert = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=a0)
    assert verify_certificate(design, k, cert)
    return design, cert


def construct_thm2_tight_graph(n: int, k: int) -> tuple[DenseGraph, ObstructionCertificate]:
    """Divisible, non-decomposable graph at the admissible-order edge bound.

    Defined for k = 3 and k = 2 mod 4.  The complement consists of
    k-cliques through z = 0 plus one disjoint larger clique A0; for k = 3
    the graph is the leave of :func:`construct_uncompletable_design`
    (whose A0 is a triangle), for k = 2 mod 4 the disjoint clique has
    k(k-1)/2 + 1 vertices.  Either way z's clique quota falls one short of
    the |A0| cliques forced through it.
    """
    if k != 3 and k % 4 != 2:
        raise ValueError(f"defined for k=3 or k = 2 mod 4, got k={k}")
    if not is_k_admissible(n, k):
        raise ValueError(f"n={n} is not {k}-admissible")
    if n < k * (k - 1) ** 2 // 2 + 1:
        raise ValueError(f"need n >= k(k-1)^2/2+1 = {k * (k - 1) ** 2 // 2 + 1}, got {n}")

    if k == 3:
        design, dcert = construct_uncompletable_design(n, 3)
        g = leave(design)
        a0 = dcert.a0
    else:
        t = (n - 1) // (k - 1) - k * (k - 1) // 2
        cliques = []
        point = 1
        for _ in range(t):
            cliques.append((0,) + tuple(range(point, point + k - 1)))
            point += k - 1
        a0 = tuple(range(point, point + k * (k - 1) // 2 + 1))
        cliques.append(a0)
        comp_edges = [
            (c[i], c[j]) for c in cliques for i in range(len(c)) for j in range(i + 1, len(c))
        ]
        g = DenseGraph.from_edges(n, comp_edges).complement()

    four_ell = k * k - k - 2
    want = (4 * (n - 1) // (k - 1) - four_ell) * comb(k, 2) // 4
    assert g.complement().num_edges() == want
    assert is_kk_divisible(g, k)
    cert = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=a0)
    assert verify_certificate(g, k, cert)
    return g, cert


def construct_thm3_tight_graph(k: int, s: int) -> tuple[DenseGraph, ObstructionCertificate]:
    """Divisible, non-decomposable graph at the any-order edge bound, k >= 4 branch.

    Needs k | s^2-s-1 (forcing k odd); the order is n = s(k-1)+2.  The
    complement is a star with n-k edges centred at z = 0 plus a perfect
    matching on the remaining k-1 vertices, so z's degree is exactly k-1
    but its neighborhood misses a matching and the single forced block is
    impossible.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if (s * s - s - 1) % k != 0:
        raise ValueError(f"k={k} does not divide s^2-s-1 = {s * s - s - 1}")
    n = s * (k - 1) + 2
    comp_edges = [(0, v) for v in range(1, n - k + 1)]
    matched = list(range(n - k + 1, n))
    for i in range(0, k - 1, 2):
        comp_edges.append((matched[i], matched[i + 1]))
    g = DenseGraph.from_edges(n, comp_edges).complement()
    assert g.complement().num_edges() == n - (k + 1) // 2
    assert is_kk_divisible(g, k)
    cert = ObstructionCertificate(FORCED_BLOCK, z=0)
    assert verify_certificate(g, k, cert)
    return g, cert


def construct_k3_tight_graph(n: int) -> tuple[DenseGraph, ObstructionCertificate]:
    """K_3-divisible, non-decomposable graph of order n at the e(n) bound.

    Covers the residues not already handled by the admissible-order
    construction: n = 0 mod 6 (complement: star(n-7) at z, a K_4, a K_2),
    n = 5 mod 6 (complement: (n-9)/2 triangles through z, a K_5, three
    isolated vertices), and n = 2,4 mod 6 (complement: star(n-3) at z plus
    a 5-edge gadget between two star leaves and the two non-star vertices).
    """
    r = n % 6
    if r == 0 and n >= 12:
        comp_edges = [(0, v) for v in range(1, n - 6)]
        four = list(range(n - 6, n - 2))
        comp_edges += [(four[i], four[j]) for i in range(4) for j in range(i + 1, 4)]
        comp_edges.append((n - 2, n - 1))
        g = DenseGraph.from_edges(n, comp_edges).complement()
        assert g.complement().num_edges() == n
        cert = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=tuple(four))
    elif r == 5 and n >= 11:
        comp_edges = []
        t = (n - 9) // 2
        for i in range(t):
            a, b = 1 + 2 * i, 2 + 2 * i
            comp_edges += [(0, a), (0, b), (a, b)]
        five = list(range(1 + 2 * t, 6 + 2 * t))
        comp_edges += [(five[i], five[j]) for i in range(5) for j in range(i + 1, 5)]
        g = DenseGraph.from_edges(n, comp_edges).complement()
        assert g.complement().num_edges() == (3 * n - 7) // 2
        cert = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=tuple(five))
    elif r in (2, 4) and n >= 8:
        comp_edges = [(0, v) for v in range(1, n - 2)]
        u, v, x, y = 1, 2, n - 2, n - 1
        comp_edges += [(u, x), (u, y), (v, x), (v, y), (x, y)]
        g = DenseGraph.from_edges(n, comp_edges).complement()
        assert g.complement().num_edges() == n + 2
        cert = ObstructionCertificate(FORCED_BLOCK, z=0)
    else:
        raise ValueError(
            f"n={n} outside the covered regimes (n>=12 with n=0 mod 6, "
            "n>=11 with n=5 mod 6, n>=8 with n=2,4 mod 6)"
        )
    assert is_kk_divisible(g, 3)
    assert verify_certificate(g, 3, cert)
    return g, cert


# ----------------------------------------------------------------------
# certificate checking


def verify_certificate(target, k: int, cert: ObstructionCertificate) -> bool:
    """Check the certificate invariants literally against the target.

    True means the counting argument applies and the target has no
    completion (design) or no K_k decomposition (graph).  Certificates are
    sufficient, not necessary, so False proves nothing.
    """
    if isinstance(target, PartialDesign):
        if cert.kind != STAR_OBSTRUCTION:
            raise ValueError(f"{cert.kind} certificates do not apply to designs")
        return _verify_design_star(target, k, cert)
    if isinstance(target, DenseGraph):
        if cert.kind == STAR_OBSTRUCTION:
            return _verify_graph_star(target, k, cert)
        return _verify_graph_forced_block(target, k, cert)
    raise ValueError(f"unsupported target type {type(target).__name__}")


def _verify_design_star(d: PartialDesign, k: int, cert: ObstructionCertificate) -> bool:
    if k != d.k or not validate_design(d):
        return False
    if (d.n - 1) % (k - 1) != 0:
        return False
    z = cert.z
    a0 = tuple(sorted(cert.a0))
    if a0 not in d.blocks or z in a0 or not 0 <= z < d.n:
        return False
    # every pair {z, x} with x in A0 must still be uncovered, so each forces
    # a distinct new block through z
    for block in d.blocks:
        if z in block and any(x in block for x in a0):
            return False
    quota = (d.n - 1) // (k - 1) - len(d.blocks_through(z))
    return quota < len(a0)


def _verify_graph_star(g: DenseGraph, k: int, cert: ObstructionCertificate) -> bool:
    z = cert.z
    if not 0 <= z < g.n:
        return False
    a0 = tuple(sorted(set(cert.a0)))
    if len(a0) != len(cert.a0):
        return False
    a0_mask = mask_of(a0)
    if a0_mask & ~g.rows[z]:
        return False
    if not g.is_independent(a0):
        return False
    return len(a0) * (k - 1) > g.degree(z)


def _verify_graph_forced_block(g: DenseGraph, k: int, cert: ObstructionCertificate) -> bool:
    z = cert.z
    if not 0 <= z < g.n:
        return False
    if g.degree(z) != k - 1:
        return False
    closed = [z] + list(bits(g.rows[z]))
    return not g.is_clique(closed)
