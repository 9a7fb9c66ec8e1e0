"""Exact arithmetic in Thompson's group F and short tours of xi-related sets in its Cayley graph."""

from .dyadic import Dyadic
from .generators import calibrate, generator_map, standard_generators
from .plmap import (
    IDENTITY,
    PLMap,
    is_identity_on,
    pl_compose,
    pl_evaluate,
    pl_invert,
    support,
)
from .words import Alphabet, GroupWord, pl_from_word, preset
from .witness import (
    SupportPair,
    WitnessReport,
    build_witness,
    check_mixed_identity,
    choose_epsilon,
    lemma1_witness,
    minimal_N,
    remark_pairs,
    standard_pair,
    verify_witness,
)
from .oracle import cayley_ball, exact_tour, graph_distance, is_xi_related, spanning_tree_tour

__all__ = [
    "Dyadic", "PLMap", "IDENTITY", "pl_compose", "pl_invert", "pl_evaluate", "support",
    "is_identity_on", "calibrate", "generator_map", "standard_generators", "Alphabet",
    "GroupWord", "pl_from_word", "preset", "SupportPair", "WitnessReport", "build_witness",
    "check_mixed_identity", "choose_epsilon", "lemma1_witness", "minimal_N", "remark_pairs",
    "standard_pair", "verify_witness", "cayley_ball", "exact_tour", "graph_distance",
    "is_xi_related", "spanning_tree_tour",
]
