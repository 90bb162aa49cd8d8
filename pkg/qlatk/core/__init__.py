from .aggregator import LanguageAggregator, RunAggregator, WordAggregator
from .buchi import (
    AcceptanceMode,
    BuchiAutomaton,
    BuchiBuilder,
    complete_buchi,
    empty_automaton,
    universal_automaton,
)
from .config import Settings, configure, get_settings, parallel_map
from .lasso import LassoWord
from .markov import MarkovBuilder, MarkovChain, MarkovEdge
from .outcome import (
    Decision,
    EvalOutcome,
    Unsupported,
    UnsupportedReason,
    Value,
    exit_code,
)
from .spec import QlaSpec, QwaSpec, dual_qla, make_spec
from .value import MINUS_INFINITY, PLUS_INFINITY, ExtValue, parse_rational, render_rational
from .wlts import Transition, Wlts, WltsBuilder, dual, separate_parallel_transitions
from .wlts_validator import (
    DEFAULT_WLTS_VALIDATORS,
    ABCWltsValidator,
    Violation,
    ViolationKind,
    validate,
)
