from .ambiguity import has_infinitely_ambiguous_word
from .complement import DEFAULT_COMPLEMENTS, RamseyComplement, RankComplement, complement
from .emptiness import EmptinessResult, LassoWitness, automaton_graph, is_empty
from .inclusion import InclusionResult, includes
from .infinite import diff_is_infinite, is_infinite
from .product import (
    accepts,
    check_alphabets,
    cobuchi_to_buchi,
    explore,
    intersect,
    lasso_automaton,
    union,
)
from .safety import live_states, safety_closure
from .supergraph import (
    Supergraph,
    TransitionMonoid,
    idempotent_power,
    letter_matrix,
    matrix_pair_accepts,
    multiply_matrices,
    pair_language_automaton,
)
