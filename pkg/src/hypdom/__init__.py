"""Matching, domination and transversal numbers of small hypergraphs, and
structural recognition of rank-3 hypergraphs with gamma = 2 nu."""

from .core import Hypergraph, build, complete_uniform
from .exact import (
    BoundReport,
    SolveResult,
    check_bound_chain,
    max_matching,
    max_matching_avoiding,
    min_dominating,
    min_transversal,
)
from .families import (
    FBlock,
    G3Spec,
    GlueEdge,
    Hhat3Spec,
    MatrixProfile,
    SampleBounds,
    expected_invariants,
    make_F,
    make_g3,
    make_h3a,
    make_hhat3,
    sample_member,
    sample_random_hypergraph,
)
from .recognize import RecognitionReport, decide_extremal, recognize, witness_to_spec
from .reduce import dominating_from_matching, edge_contract, hstar_report, peel

__version__ = "0.1.0"
