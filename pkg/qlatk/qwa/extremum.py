from qlatk.core.aggregator import WordAggregator
from qlatk.core.buchi import universal_automaton
from qlatk.core.outcome import EvalOutcome, Unsupported, UnsupportedReason, Value
from qlatk.core.spec import QwaSpec
from qlatk.core.value import ExtValue
from qlatk.modules import logger
from qlatk.omega import includes

from .position_graph import best_run_value, system_graph, worst_run_value
from .profile import LassoProfiles
from .threshold import threshold_automaton


def negate(outcome: EvalOutcome) -> EvalOutcome:
    if isinstance(outcome, Value):
        return Value(-outcome.value, outcome.witness)
    return outcome


def top_value(spec: QwaSpec) -> EvalOutcome:
    """ Supremum of the word values """
    g = spec.g
    if g is WordAggregator.EXP:
        if spec.system.is_deterministic():
            return top_value(spec.with_aggregators(g=WordAggregator.SUP))
        return Unsupported(UnsupportedReason.UNDECIDABLE, "extremum:exp")
    elif g in (WordAggregator.INF, WordAggregator.LIM_INF):
        return negate(bottom_value(spec.dual()))
    elif g is WordAggregator.SUP:
        return Value(best_run_value(system_graph(spec.system), spec.f, spec.discount))
    elif not spec.f.is_standard:
        return Unsupported(UnsupportedReason.OPEN_HARD, f"limit:{spec.f.family}")
    profiles = LassoProfiles([spec])
    pair = max(profiles.pairs, key=lambda pair: profiles.word_value(pair, 0))
    return Value(ExtValue.of(profiles.word_value(pair, 0)), profiles.lasso(pair))


def bottom_value(spec: QwaSpec) -> EvalOutcome:
    """ Infimum of the word values """
    g = spec.g
    if g is WordAggregator.EXP:
        if spec.system.is_deterministic():
            return bottom_value(spec.with_aggregators(g=WordAggregator.SUP))
        return Unsupported(UnsupportedReason.UNDECIDABLE, "extremum:exp")
    elif g in (WordAggregator.INF, WordAggregator.LIM_INF):
        return negate(top_value(spec.dual()))
    elif g is WordAggregator.LIM_SUP:
        if not spec.f.is_standard:
            return Unsupported(UnsupportedReason.OPEN_HARD, f"limit:{spec.f.family}")
        profiles = LassoProfiles([spec])
        pair = min(profiles.pairs, key=lambda pair: profiles.word_value(pair, 0))
        return Value(ExtValue.of(profiles.word_value(pair, 0)), profiles.lasso(pair))

    if spec.f.is_standard:
        return Value(ExtValue.of(_largest_universal_threshold(spec)))
    elif spec.system.is_deterministic():
        return Value(worst_run_value(system_graph(spec.system), spec.f, spec.discount))
    elif spec.f.is_average:
        return Unsupported(UnsupportedReason.UNDECIDABLE, "bottom:avg")
    return Unsupported(UnsupportedReason.OPEN_HARD, "bottom:dsum")


def _largest_universal_threshold(spec: QwaSpec):
    """ Binary search for the largest weight x such that every word has a run of value >= x """
    weights = spec.system.weights()
    everything = universal_automaton(spec.alphabet)
    low, high = 0, len(weights) - 1
    while low < high:
        middle = (low + high + 1) // 2
        if includes(everything, threshold_automaton(spec, weights[middle], ">=")):
            low = middle
        else:
            high = middle - 1
    logger.debug(f"Every word reaches {weights[low]}")
    return weights[low]
