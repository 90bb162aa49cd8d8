import typing
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.buchi import BuchiAutomaton, empty_automaton
from qlatk.core.spec import QwaSpec
from qlatk.core.wlts import Wlts, separate_parallel_transitions
from qlatk.exception_factory import UnsupportedAggregationError
from qlatk.modules import logger
from qlatk.omega import complement, explore, intersect

Number = typing.Union[int, Fraction]
Mode = typing.Hashable


class ThresholdRelation(Enum):
    AT_LEAST = ">="
    ABOVE = ">"
    EXACTLY = "="


@dataclass(frozen=True)
class RunTracker:
    """ Finite memory read along a run: `step` gives the memories after a weight (none when
    the weight is forbidden), runs are accepted when accepting memories recur """

    initial: Mode
    step: typing.Callable[[Mode, Fraction], typing.Tuple[Mode, ...]]
    accepting: typing.Callable[[Mode], bool]


def at_least_tracker(f: RunAggregator, x: Fraction) -> RunTracker:
    """ Runs whose value is at least x """
    if f is RunAggregator.SUP:
        return RunTracker(False, lambda seen, w: (seen or w >= x,), bool)
    elif f is RunAggregator.INF:
        return RunTracker(True, lambda mode, w: (True,) if w >= x else (), bool)
    elif f is RunAggregator.LIM_SUP:
        return RunTracker(False, lambda last, w: (w >= x,), bool)

    def settle(phase: int, w: Fraction) -> typing.Tuple[int, ...]:
        if phase == 0:
            return (0, 1) if w >= x else (0,)
        return (1,) if w >= x else ()

    return RunTracker(0, settle, lambda phase: phase == 1)


def exact_tracker(f: RunAggregator, x: Fraction) -> RunTracker:
    """ Runs whose value is exactly x, one accepted tracker run per such run.

    For the limit run aggregators a run starts out waiting (phase 0, then 1) and settles
    (phase 2) on its first weight or on a weight dismissing x. Waiting runs settle on
    dismissing weights only and settled runs never read one, so the last dismissing weight
    is the only place to settle. Settled memories note whether the last weight was x
    """
    if f in (RunAggregator.SUP, RunAggregator.INF):
        bounded = (lambda w: w <= x) if f is RunAggregator.SUP else (lambda w: w >= x)
        return RunTracker(
            False, lambda seen, w: (seen or w == x,) if bounded(w) else (), bool
        )
    dismissing = (lambda w: w > x) if f is RunAggregator.LIM_SUP else (lambda w: w < x)

    def settle(mode: typing.Tuple[int, bool], w: Fraction) -> tuple:
        phase, _ = mode
        if phase == 2:
            return () if dismissing(w) else ((2, w == x),)
        elif phase == 1 and not dismissing(w):
            return ((1, False),)
        return (1, False), (2, w == x)

    return RunTracker((0, False), settle, lambda mode: mode == (2, True))


def tracked_runs_automaton(spec: QwaSpec, tracker: RunTracker, what: str) -> BuchiAutomaton:
    """ Words with a run accepted by the tracker """
    system = spec.system

    def successors(state, letter):
        q, mode = state
        for transition in system.successors(q, letter):
            for following in tracker.step(mode, transition.weight):
                yield transition.target, following

    return explore(
        system.alphabet,
        ((q, tracker.initial) for q in system.initial_states),
        successors,
        lambda state: tracker.accepting(state[1]),
        what,
    )


def _check(spec: QwaSpec) -> None:
    if spec.g is not WordAggregator.SUP or not spec.f.is_standard:
        raise UnsupportedAggregationError(
            f"threshold automata need g=sup and a standard run aggregator, "
            f"got g={spec.g.value} f={spec.f.value}"
        )


def threshold_automaton(
    spec: QwaSpec, x: Number, relation: typing.Union[str, ThresholdRelation] = ">="
) -> BuchiAutomaton:
    """ Buchi automaton of the words whose value is at least, above or exactly x """
    _check(spec)
    relation, x = ThresholdRelation(relation), Fraction(x)
    if relation is ThresholdRelation.EXACTLY:
        return value_language(spec, x)
    elif relation is ThresholdRelation.ABOVE:
        above = [weight for weight in spec.system.weights() if weight > x]
        if not above:
            return empty_automaton(spec.alphabet)
        x = above[0]
    return tracked_runs_automaton(spec, at_least_tracker(spec.f, x), f"threshold automaton >={x}")


def has_parallel_transitions(system: Wlts) -> bool:
    """ Whether two transitions share source, letter and target """
    return any(
        len({t.target for t in transitions}) < len(transitions)
        for transitions in system.transitions.values()
    )


def exact_runs_automaton(spec: QwaSpec, x: Number) -> BuchiAutomaton:
    """ Words with a run of value exactly x. Accepting runs are in bijection with the runs
    of value x, so a word has infinitely many of them iff it has infinitely many runs of
    value x """
    _check(spec)
    x = Fraction(x)
    if x not in spec.system.weights():
        return empty_automaton(spec.alphabet)
    elif has_parallel_transitions(spec.system):
        spec = spec.with_system(separate_parallel_transitions(spec.system))
    return tracked_runs_automaton(spec, exact_tracker(spec.f, x), f"exact runs automaton ={x}")


def value_language(spec: QwaSpec, x: Number) -> BuchiAutomaton:
    """ Words of value exactly x: a run of value x and no run above x """
    _check(spec)
    x = Fraction(x)
    logger.debug(f"Building the value language of {x}")
    return intersect(
        exact_runs_automaton(spec, x), complement(threshold_automaton(spec, x, ">"))
    )
