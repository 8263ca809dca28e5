"""State complexity of reversal for partially ordered and piecewise testable languages."""

from .automata import (
    Dfa,
    Nfa,
    build_dfa,
    complement,
    determinize,
    minimize,
    reverse,
    reverse_state_complexity,
    state_complexity,
)
from .order import is_j_trivial, is_partially_ordered, is_r_trivial, simon_condition, trahtman_condition
from .regex import parse_regex, regex_to_min_dfa
from .search import SearchRecord, worst_case_reverse
from .witnesses import (
    corollary3_bound,
    fig2_witness,
    fig5_witness,
    jtrivial_alphabet_bound,
    table1_witness,
    theorem1_bound,
)

__all__ = [
    "Dfa", "Nfa", "SearchRecord", "build_dfa", "complement", "corollary3_bound", "determinize",
    "fig2_witness", "fig5_witness", "is_j_trivial", "is_partially_ordered", "is_r_trivial",
    "jtrivial_alphabet_bound", "minimize", "parse_regex", "regex_to_min_dfa", "reverse",
    "reverse_state_complexity", "simon_condition", "state_complexity", "table1_witness",
    "theorem1_bound", "trahtman_condition", "worst_case_reverse",
]
