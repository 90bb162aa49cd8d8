import typing
from fractions import Fraction

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.buchi import SINK, BuchiAutomaton
from qlatk.core.config import parallel_map
from qlatk.core.outcome import EvalOutcome, Value
from qlatk.core.spec import QlaSpec, QwaSpec
from qlatk.core.value import ExtValue
from qlatk.exception_factory import InvalidSpecError
from qlatk.graph import Optimize, WeightedDigraph, discounted_best_value, max_mean_cycle, sccs
from qlatk.modules import logger
from qlatk.omega import (
    check_alphabets,
    cobuchi_to_buchi,
    includes,
    intersect,
    is_empty,
    is_infinite,
    safety_closure,
)
from qlatk.qwa import (
    LassoProfiles,
    RunGraph,
    bottom_value,
    negate,
    threshold_automaton,
    top_value,
    value_language,
)

from .extremes import limit_extremes
from .routing import evaluation_route


def refine_deterministic(spec: QlaSpec) -> QlaSpec:
    """ On a deterministic system every word has one run, so Inf, Sup and E agree on words """
    qwa = spec.qwa
    if qwa.g.is_limit or not qwa.system.is_deterministic():
        return spec
    if spec.h in (WordAggregator.INF, WordAggregator.SUP, WordAggregator.EXP):
        g = spec.h
    else:
        g = WordAggregator.SUP
    if g is not qwa.g:
        logger.debug(f"Deterministic system, word aggregator {qwa.g.value} read as {g.value}")
    return QlaSpec(spec.h, qwa.with_aggregators(g=g))


def largest_weight(
    weights: typing.Sequence[Fraction], holds: typing.Callable[[Fraction], bool]
) -> Fraction:
    """ Binary search over sorted weights for a predicate closed downwards that holds at the
    least weight """
    low, high = 0, len(weights) - 1
    while low < high:
        middle = (low + high + 1) // 2
        if holds(weights[middle]):
            low = middle
        else:
            high = middle - 1
    return weights[low]


def restricted_runs(system, language: BuchiAutomaton) -> typing.Tuple[RunGraph, set]:
    """ Runs of the system on words of the language: nodes (state, language state), the
    second result holds the nodes whose language state is accepting """
    language = cobuchi_to_buchi(language)
    graph = WeightedDigraph()
    initial = tuple((q, p) for q in system.initial_states for p in language.initial)
    for node in initial:
        graph.add_node(node)
    queue, accepting = list(initial), set()
    while queue:
        node = queue.pop()
        q, p = node
        if language.is_accepting(p):
            accepting.add(node)
        for letter in system.alphabet:
            for transition in system.successors(q, letter):
                for target in language.successors(p, letter):
                    successor = (transition.target, target)
                    if successor not in graph:
                        graph.add_node(successor)
                        queue.append(successor)
                    graph.add_edge(node, transition.weight, successor, letter)
    return RunGraph(graph, initial), accepting


def _average_value(qwa: QwaSpec, language: BuchiAutomaton) -> ExtValue:
    runs, accepting = restricted_runs(qwa.system, language)
    graph = runs.graph
    means = [
        max_mean_cycle(graph.subgraph(component.nodes)).value
        for component in sccs(graph)
        if not component.trivial and any(node in accepting for node in component.nodes)
    ]
    return max(means)


def _discounted_value(qwa: QwaSpec, language: BuchiAutomaton) -> ExtValue:
    closure = safety_closure(language)
    runs, _ = restricted_runs(qwa.system, closure)
    graph = runs.graph.subgraph(node for node in runs.graph.nodes if node[1] != SINK)
    solution = discounted_best_value(graph, qwa.discount, Optimize.MAX)
    return ExtValue.of(max(solution[node] for node in runs.initial if node in graph))


def _threshold_value(spec: QlaSpec, language: BuchiAutomaton) -> Value:
    qwa, h = spec.qwa, spec.h
    weights = qwa.system.weights()
    if h is WordAggregator.INF:
        x = largest_weight(weights, lambda x: includes(language, threshold_automaton(qwa, x)))
        return Value(ExtValue.of(x))

    def witness(x: Fraction):
        return is_empty(intersect(language, threshold_automaton(qwa, x))).witness

    x = largest_weight(weights, lambda x: witness(x) is not None)
    return Value(ExtValue.of(x), witness(x).word)


def _limit_language_value(spec: QlaSpec, language: BuchiAutomaton) -> EvalOutcome:
    """ LimSup: largest value taken by infinitely many words of the language, LimInf: the
    smallest one """
    qwa, sup_like = spec.qwa, spec.h is WordAggregator.LIM_SUP
    weights = qwa.system.weights()
    infinite = parallel_map(
        lambda x: is_infinite(intersect(language, value_language(qwa, x))), weights
    )
    candidates = [x for x, flag in zip(weights, infinite) if flag]
    if candidates:
        return Value(ExtValue.of(max(candidates) if sup_like else min(candidates)))
    logger.debug("No value is taken by infinitely many words of the language")
    return Value(limit_extremes(qwa).of(spec.h))


def _profile_value(spec: QlaSpec, language: BuchiAutomaton) -> Value:
    """ Limit word aggregators through the lasso types of the system joined with the
    language """
    profiles = LassoProfiles([spec.qwa], [language])
    members = [pair for pair in profiles.pairs if profiles.accepts(pair, 0)]
    h = spec.h
    if h in (WordAggregator.SUP, WordAggregator.INF):
        keep = max if h is WordAggregator.SUP else min
        pair = keep(members, key=lambda pair: profiles.word_value(pair, 0))
        return Value(ExtValue.of(profiles.word_value(pair, 0)), profiles.lasso(pair))

    classes: typing.Dict[Fraction, list] = {}
    for pair in members:
        classes.setdefault(profiles.word_value(pair, 0), []).append(pair)
    order = sorted(classes, reverse=h is WordAggregator.LIM_SUP)
    for value in order:
        if is_infinite(profiles.language(classes[value])):
            return Value(ExtValue.of(value))
    return Value(limit_extremes(spec.qwa).of(h))


def eval_regular(spec: QlaSpec, language: BuchiAutomaton) -> EvalOutcome:
    """ Value of the language: word values of its members aggregated by h """
    if spec.h is WordAggregator.EXP:
        raise InvalidSpecError("h=exp aggregates over Markov chains, use eval_markov")
    check_alphabets(spec.alphabet, language.alphabet)
    spec = refine_deterministic(spec)
    route = evaluation_route(spec.h, spec.g, spec.f)
    if not route.is_algorithm:
        return route.outcome()
    elif spec.g in (WordAggregator.INF, WordAggregator.LIM_INF):
        return negate(eval_regular(spec.dual(), language))

    qwa, h = spec.qwa, spec.h
    if is_empty(language).empty:
        logger.debug("Empty language takes the extremum of the automaton")
        if h.is_limit:
            return Value(limit_extremes(qwa).of(h))
        return bottom_value(qwa) if h.is_sup_like else top_value(qwa)
    elif qwa.g is WordAggregator.LIM_SUP:
        return _profile_value(spec, language)
    elif h.is_limit:
        return _limit_language_value(spec, language)
    elif qwa.f.is_standard:
        return _threshold_value(spec, language)
    elif qwa.f is RunAggregator.DSUM:
        return Value(_discounted_value(qwa, language))
    return Value(_average_value(qwa, language))
