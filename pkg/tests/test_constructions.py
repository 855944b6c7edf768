from math import comb

import pytest

from blockdesign.constructions import (
    FORCED_BLOCK,
    STAR_OBSTRUCTION,
    ObstructionCertificate,
    construct_k3_tight_graph,
    construct_thm2_tight_graph,
    construct_thm3_tight_graph,
    construct_uncompletable_design,
    verify_certificate,
)
from blockdesign.core import is_k_admissible, is_kk_divisible, leave, validate_design
from blockdesign.decompose import DECOMPOSED, NONE, exact_decompose
from blockdesign.graphs import DenseGraph


def test_certificate_kind_validation():
    with pytest.raises(ValueError):
        ObstructionCertificate("bogus", z=0)
    with pytest.raises(ValueError):
        ObstructionCertificate(STAR_OBSTRUCTION, z=0)  # needs A0
    with pytest.raises(ValueError):
        ObstructionCertificate(FORCED_BLOCK, z=0, a0=(1, 2))


def test_evans_7_3_canonical():
    design, cert = construct_uncompletable_design(7, 3)
    assert design.blocks == ((0, 1, 2), (3, 4, 5))
    assert cert.z == 0 and cert.a0 == (3, 4, 5)


def test_evans_13_4():
    design, _ = construct_uncompletable_design(13, 4)
    assert len(design.blocks) == 2


def test_evans_19_3():
    design, cert = construct_uncompletable_design(19, 3)
    assert len(design.blocks) == 8
    assert len(design.blocks_through(0)) == 7


def test_evans_rejects_bad_parameters():
    with pytest.raises(ValueError):
        construct_uncompletable_design(8, 3)  # not admissible
    with pytest.raises(ValueError):
        construct_uncompletable_design(13, 5)


def test_evans_block_count_and_validity_sweep():
    for n in range(7, 101):
        if not is_k_admissible(n, 3):
            continue
        design, cert = construct_uncompletable_design(n, 3)
        assert validate_design(design).ok
        assert len(design.blocks) == (n - 1) // 2 - 1
        assert verify_certificate(design, 3, cert)


def test_thm2_k3_is_leave_of_evans_design():
    g, cert = construct_thm2_tight_graph(13, 3)
    assert g.complement().num_edges() == 15
    assert is_kk_divisible(g, 3)
    # paper's k=3 construction: leave of the minimum uncompletable design
    design, _ = construct_uncompletable_design(13, 3)
    assert g == leave(design)
    assert g.degree(0) == 4


def test_thm2_k6_n91():
    g, cert = construct_thm2_tight_graph(91, 6)
    assert g.complement().num_edges() == 165
    assert is_kk_divisible(g, 6)
    assert g.degree(0) == 6 * 25 // 2  # n-1-t(k-1) = k(k-1)^2/2
    assert cert.a0 is not None and len(cert.a0) == 16


def test_thm2_rejects_bad_k():
    with pytest.raises(ValueError):
        construct_thm2_tight_graph(13, 4)
    with pytest.raises(ValueError):
        construct_thm2_tight_graph(12, 3)


def test_thm2_edge_count_sweep():
    for n in range(7, 201):
        if is_k_admissible(n, 3):
            g, _ = construct_thm2_tight_graph(n, 3)
            assert g.complement().num_edges() == ((n - 1) // 2 - 1) * 3
    for n in range(76, 201):
        if is_k_admissible(n, 6):
            g, _ = construct_thm2_tight_graph(n, 6)
            assert g.complement().num_edges() == (4 * (n - 1) // 5 - 28) * 15 // 4


def test_thm3_k5_s3():
    g, cert = construct_thm3_tight_graph(5, 3)
    assert g.n == 14
    assert g.complement().num_edges() == 11
    assert is_kk_divisible(g, 5)
    assert cert.kind == FORCED_BLOCK and cert.z == 0
    assert g.degree(0) == 4
    assert all(g.degree(x) == 12 for x in range(1, 14))


def test_thm3_k11_s4():
    g, _ = construct_thm3_tight_graph(11, 4)
    assert g.n == 42
    assert g.complement().num_edges() == 36
    assert is_kk_divisible(g, 11)
    assert all(g.degree(x) == 40 for x in range(1, 42))


def test_thm3_rejects_bad_divisor():
    with pytest.raises(ValueError):
        construct_thm3_tight_graph(5, 4)  # 16-4-1 = 11 not divisible by 5


def test_k3_family_counts():
    g12, c12 = construct_k3_tight_graph(12)
    assert g12.complement().num_edges() == 12 and c12.kind == STAR_OBSTRUCTION
    assert len(c12.a0) == 4 and g12.degree(0) == 6
    g11, c11 = construct_k3_tight_graph(11)
    assert g11.complement().num_edges() == 13 and len(c11.a0) == 5
    assert g11.degree(0) == 8
    g8, c8 = construct_k3_tight_graph(8)
    assert g8.complement().num_edges() == 10 and c8.kind == FORCED_BLOCK
    assert g8.degree(0) == 2


def test_k3_family_rejects_out_of_regime():
    for n in (6, 9, 5, 7, 13):
        with pytest.raises(ValueError):
            construct_k3_tight_graph(n)


def test_k3_family_sweep():
    for n in range(8, 201):
        r = n % 6
        if r == 0 and n >= 12:
            want = n
        elif r == 5 and n >= 11:
            want = (3 * n - 7) // 2
        elif r in (2, 4):
            want = n + 2
        else:
            continue
        g, cert = construct_k3_tight_graph(n)
        assert g.complement().num_edges() == want
        assert is_kk_divisible(g, 3)
        assert verify_certificate(g, 3, cert)


def test_verify_rejects_wrong_kind_for_design():
    design, _ = construct_uncompletable_design(7, 3)
    with pytest.raises(ValueError):
        verify_certificate(design, 3, ObstructionCertificate(FORCED_BLOCK, z=0))


def test_verify_design_negative_cases():
    design, cert = construct_uncompletable_design(7, 3)
    # swapping A0 for the block through z fails: z is in that block
    swapped = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=(0, 1, 2))
    assert not verify_certificate(design, 3, swapped)
    # a non-block A0 fails
    fake = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=(3, 4, 6))
    assert not verify_certificate(design, 3, fake)
    # covered pair z-x defuses the count: z inside another block with x
    covered = ObstructionCertificate(STAR_OBSTRUCTION, z=1, a0=(0, 1, 2))
    assert not verify_certificate(design, 3, covered)


def test_verify_graph_negative_cases():
    k7 = DenseGraph.complete(7)
    for z in range(7):
        assert not verify_certificate(k7, 3, ObstructionCertificate(FORCED_BLOCK, z=z))
    # A0 not independent
    g, cert = construct_k3_tight_graph(12)
    dependent = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=(cert.a0[0], cert.a0[1], 1, 2))
    assert not verify_certificate(g, 3, dependent)
    # quota large enough: a 2-set through a degree-6 vertex proves nothing
    small = ObstructionCertificate(STAR_OBSTRUCTION, z=0, a0=cert.a0[:2])
    assert not verify_certificate(g, 3, small)


def test_certificates_sound_vs_exact_search_small():
    design, cert = construct_uncompletable_design(7, 3)
    assert verify_certificate(design, 3, cert)
    assert exact_decompose(leave(design), 3).status == NONE
    g, gcert = construct_k3_tight_graph(8)
    assert verify_certificate(g, 3, gcert)
    assert exact_decompose(g, 3).status == NONE


def test_fisher_remark_small_k():
    # the complete graph on k(k-1)/2 + 1 vertices has no K_k decomposition
    for k in (3, 4, 5):
        g = DenseGraph.complete(k * (k - 1) // 2 + 1)
        assert exact_decompose(g, k).status == NONE


def test_generated_graphs_not_decomposable_claim_matches_quota():
    # star obstruction arithmetic: |A0|(k-1) > deg(z)
    for n in (12, 11):
        g, cert = construct_k3_tight_graph(n)
        assert len(cert.a0) * 2 > g.degree(cert.z)
