from .core import *
from .exception_factory import (
    ABCExceptionFactory,
    AlphabetMismatchError,
    CodeErrorFactory,
    ConstructionLimitError,
    InvalidSpecError,
    InvalidSystemError,
    OracleLimitError,
    ParseError,
    QLATKError,
    SingleError,
    SingularSystemError,
    UnknownLetterError,
    UnsupportedAggregationError,
    swear,
)
from .loader import (
    dump_buchi,
    dump_markov,
    dump_qwa,
    load,
    load_buchi,
    load_markov,
    load_qwa,
    loads_buchi,
    loads_markov,
    loads_qwa,
)
from .omega import complement, includes, intersect, is_empty, is_infinite, safety_closure, union
from .prob import eval_markov, measure_buchi
from .qla import (
    ProblemVariant,
    Restriction,
    decide_approximate_nonemptiness,
    decide_nonemptiness,
    decide_universality,
    eval_regular,
    qla_bot,
    qla_inclusion,
    qla_top,
)
from .qwa import bottom_value, eval_lasso, threshold_automaton, top_value
