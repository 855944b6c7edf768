"""Partial (n,k,1)-design completion and K_k edge decomposition toolkit."""

from .cliques import find_clique, find_clique_factor, find_clique_in_mutual_neighborhood, maximum_matching
from .coloring import (
    ColoringFailure,
    ColoringInstance,
    EquitableColoring,
    degeneracy_ordering,
    equitable_color,
    lemma_colouring2_hypothesis,
    lemma_colouring3_hypothesis,
    lemma_colouring_hypothesis,
)
from .constructions import (
    ObstructionCertificate,
    construct_k3_tight_graph,
    construct_thm2_tight_graph,
    construct_thm3_tight_graph,
    construct_uncompletable_design,
    verify_certificate,
)
from .core import (
    BoundReport,
    CliqueDecomposition,
    PartialDesign,
    bound_report,
    e_of_n,
    evans_block_bound,
    is_completion,
    is_k_admissible,
    is_kk_divisible,
    leave,
    thm2_edge_bound,
    thm3_edge_bound,
    validate_decomposition,
    validate_design,
)
from .decompose import (
    ExactSearchResult,
    InductiveResult,
    check_lemma3_hypotheses,
    check_lemma4_hypotheses,
    derive_low_degree_set,
    exact_decompose,
    exact_terminal,
    inductive_decompose,
)
from .exactcover import decompose_by_exact_cover, first_exact_cover
from .graphs import DenseGraph
from .pipeline import (
    CompletionResult,
    DecompositionOutcome,
    complete_design,
    decompose_admissible_order,
    decompose_any_order,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CliqueDecomposition",
    "ColoringFailure",
    "ColoringInstance",
    "CompletionResult",
    "DecompositionOutcome",
    "DenseGraph",
    "EquitableColoring",
    "ExactSearchResult",
    "InductiveResult",
    "ObstructionCertificate",
    "PartialDesign",
    "bound_report",
    "check_lemma3_hypotheses",
    "check_lemma4_hypotheses",
    "complete_design",
    "construct_k3_tight_graph",
    "construct_thm2_tight_graph",
    "construct_thm3_tight_graph",
    "construct_uncompletable_design",
    "decompose_admissible_order",
    "decompose_any_order",
    "decompose_by_exact_cover",
    "degeneracy_ordering",
    "derive_low_degree_set",
    "e_of_n",
    "equitable_color",
    "evans_block_bound",
    "exact_decompose",
    "exact_terminal",
    "find_clique",
    "find_clique_factor",
    "find_clique_in_mutual_neighborhood",
    "first_exact_cover",
    "inductive_decompose",
    "is_completion",
    "is_k_admissible",
    "is_kk_divisible",
    "leave",
    "lemma_colouring2_hypothesis",
    "lemma_colouring3_hypothesis",
    "lemma_colouring_hypothesis",
    "maximum_matching",
    "thm2_edge_bound",
    "thm3_edge_bound",
    "validate_decomposition",
    "validate_design",
    "verify_certificate",
]
