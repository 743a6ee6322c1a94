"""Dynamic programs over nice k-almost chordal tree decompositions."""
from .candidates import CandidateFamily, candidate_bound, enumerate_bag_candidates
from .colorable import check_homomorphism, solve_d_colorable, solve_h_colorable
from .coloring import set_partitions, solve_coloring
from .cvc import check_cvc, solve_cvc
from .degenerate import coloring_ordering_degree, solve_d_degenerate
from .problems import CLASSIC, is_forest, solve_classic

__all__ = [
    "CandidateFamily",
    "candidate_bound",
    "enumerate_bag_candidates",
    "solve_d_colorable",
    "solve_h_colorable",
    "check_homomorphism",
    "solve_d_degenerate",
    "coloring_ordering_degree",
    "solve_coloring",
    "set_partitions",
    "solve_cvc",
    "check_cvc",
    "solve_classic",
    "is_forest",
    "CLASSIC",
]
