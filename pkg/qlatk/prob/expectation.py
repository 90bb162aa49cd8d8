import typing
from fractions import Fraction

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.config import get_settings, parallel_map
from qlatk.core.markov import MarkovBuilder, MarkovChain, MarkovEdge
from qlatk.core.outcome import EvalOutcome, Value
from qlatk.core.spec import QlaSpec, QwaSpec
from qlatk.core.value import ExtValue
from qlatk.exception_factory import InvalidSpecError
from qlatk.graph.linear import solve
from qlatk.graph.markov_analysis import bsccs, stationary_mean
from qlatk.modules import logger
from qlatk.qla.evaluation import refine_deterministic
from qlatk.qla.routing import evaluation_route
from qlatk.qwa.extremum import negate
from qlatk.qwa.threshold import threshold_automaton

from .measure import check_chain_letters, measure_buchi

State = typing.Hashable


def weight_of(edge: MarkovEdge) -> Fraction:
    return edge.letter[1]


def product_chain(spec: QwaSpec, chain: MarkovChain) -> MarkovChain:
    """ Joint chain of the word generator and the probabilistic runs of the automaton,
    edges are labelled (letter, weight) """
    check_chain_letters(chain, spec.alphabet)
    system = spec.system
    settings = get_settings()
    builder = MarkovBuilder()
    queue = []
    for c in chain.initial_states:
        for q in system.initial_states:
            builder.initial_state((c, q), chain.initial[c] * system.initial[q])
            queue.append((c, q))
    seen = set(queue)
    while queue:
        node = queue.pop()
        c, q = node
        for edge in chain.edges(c):
            for transition in system.successors(q, edge.letter):
                target = (edge.target, transition.target)
                builder.add(
                    node, (edge.letter, transition.weight), edge.prob * transition.prob, target
                )
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
                    settings.check_size(len(seen), "product chain")
    return builder.build()


def running_extremum(product: MarkovChain, f: RunAggregator) -> MarkovChain:
    """ Remembers the extremum of the weights read so far """
    keep = max if f is RunAggregator.SUP else min
    builder = MarkovBuilder()
    queue = []
    for state in product.initial_states:
        builder.initial_state((state, None), product.initial[state])
        queue.append((state, None))
    seen = set(queue)
    while queue:
        node = queue.pop()
        state, memory = node
        for edge in product.edges(state):
            weight = weight_of(edge)
            target = (edge.target, weight if memory is None else keep(memory, weight))
            builder.add(node, edge.letter, edge.prob, target)
            if target not in seen:
                seen.add(target)
                queue.append(target)
    return builder.build()


def _expected_dsum(product: MarkovChain, discount: Fraction) -> Fraction:
    states = product.states
    position = {state: i for i, state in enumerate(states)}
    matrix = [[Fraction(0)] * len(states) for _ in states]
    rhs = [Fraction(0)] * len(states)
    for state in states:
        i = position[state]
        matrix[i][i] += 1
        for edge in product.edges(state):
            matrix[i][position[edge.target]] -= discount * edge.prob
            rhs[i] += edge.prob * weight_of(edge)
    values = solve(matrix, rhs)
    return sum(
        (product.initial[state] * values[position[state]] for state in product.initial_states),
        Fraction(0),
    )


def expected_value(spec: QwaSpec, chain: MarkovChain) -> Fraction:
    """ Expected run value when both the word and the run are drawn at random """
    product = product_chain(spec, chain)
    f = spec.f
    logger.debug(f"Expected {f.value} over a product chain of {len(product.states)} states")
    if f is RunAggregator.DSUM:
        return _expected_dsum(product, spec.discount)
    elif f in (RunAggregator.SUP, RunAggregator.INF):
        augmented = running_extremum(product, f)
        return sum(
            (bottom.probability * next(iter(bottom.states))[1] for bottom in bsccs(augmented)),
            Fraction(0),
        )

    total = Fraction(0)
    for bottom in bsccs(product):
        if f.is_average:
            value = stationary_mean(product, lambda _, edge: weight_of(edge), bottom.states)
        else:
            keep = max if f is RunAggregator.LIM_SUP else min
            value = keep(
                weight_of(edge)
                for state in bottom.states
                for edge in product.edges(state)
            )
        total += bottom.probability * value
    return total


def eval_markov(spec: QlaSpec, chain: MarkovChain) -> EvalOutcome:
    """ Expected word value over the words the chain generates """
    if spec.h is not WordAggregator.EXP:
        raise InvalidSpecError(f"Markov chain evaluation needs h=exp, got {spec.h.value}")
    check_chain_letters(chain, spec.alphabet)
    qwa = refine_deterministic(spec).qwa

    route = evaluation_route(WordAggregator.EXP, qwa.g, qwa.f)
    if not route.is_algorithm:
        return route.outcome()
    elif qwa.g is WordAggregator.EXP:
        return Value(ExtValue.of(expected_value(qwa, chain)))
    elif qwa.g is WordAggregator.INF:
        return negate(eval_markov(QlaSpec(WordAggregator.EXP, qwa.dual()), chain))
    return Value(ExtValue.of(_expected_sup(qwa, chain)))


def _expected_sup(spec: QwaSpec, chain: MarkovChain) -> Fraction:
    """ Sum of x * P(value = x) with P(value >= x) measured on threshold automata """
    weights = spec.system.weights()
    at_least = parallel_map(
        lambda x: measure_buchi(threshold_automaton(spec, x), chain), weights
    )
    total = Fraction(0)
    for i, weight in enumerate(weights):
        above = at_least[i + 1] if i + 1 < len(weights) else Fraction(0)
        total += weight * (at_least[i] - above)
    return total
