import typing
from dataclasses import dataclass
from fractions import Fraction

from qlatk.core.markov import MarkovChain, MarkovEdge
from qlatk.exception_factory import QLATKError
from qlatk.modules import logger

from .digraph import WeightedDigraph
from .linear import LinearSystem, solve_linear
from .scc import sccs

State = typing.Hashable


@dataclass(frozen=True)
class BottomComponent:
    states: typing.FrozenSet[State]
    probability: Fraction

    def __contains__(self, state: State) -> bool:
        return state in self.states


def chain_graph(chain: MarkovChain) -> WeightedDigraph:
    graph = WeightedDigraph(chain.states)
    for state in chain.states:
        for edge in chain.edges(state):
            graph.add_edge(state, 0, edge.target, edge)
    return graph


def bsccs(chain: MarkovChain) -> typing.List[BottomComponent]:
    """ Bottom SCCs reachable from the initial distribution with their exact absorption
    probabilities """
    graph = chain_graph(chain)
    reachable = graph.reachable(chain.initial_states)
    graph = graph.subgraph(reachable)
    bottoms = [
        component.nodes
        for component in sccs(graph)
        if all(
            edge.target in component.nodes
            for state in component.nodes
            for edge in graph.out_edges(state)
        )
    ]
    in_bottom = {state for bottom in bottoms for state in bottom}
    transient = [state for state in graph.nodes if state not in in_bottom]
    logger.debug(
        f"Chain with {len(graph.nodes)} reachable states has {len(bottoms)} bottom components "
        f"and {len(transient)} transient states"
    )

    result = []
    for bottom in bottoms:
        absorbed = absorption_probabilities(chain, transient, bottom)
        probability = sum(
            (
                prob * (Fraction(1) if state in bottom else absorbed.get(state, Fraction(0)))
                for state, prob in chain.initial.items()
            ),
            Fraction(0),
        )
        result.append(BottomComponent(frozenset(bottom), probability))
    return result


def absorption_probabilities(
    chain: MarkovChain, transient: typing.Sequence[State], target: typing.Collection[State]
) -> typing.Dict[State, Fraction]:
    """ Probability of eventually entering target from every transient state; the transient
    states must leave the transient set almost surely """
    if not transient:
        return {}
    position = {state: i for i, state in enumerate(transient)}
    size = len(transient)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    rhs = [Fraction(0)] * size
    for state in transient:
        i = position[state]
        matrix[i][i] += 1
        for edge in chain.edges(state):
            if edge.target in position:
                matrix[i][position[edge.target]] -= edge.prob
            elif edge.target in target:
                rhs[i] += edge.prob
    solution = solve_linear(LinearSystem(matrix, rhs))
    return {state: solution[position[state]] for state in transient}


def stationary_distribution(
    chain: MarkovChain, component: typing.Collection[State]
) -> typing.Dict[State, Fraction]:
    """ Stationary distribution of a bottom SCC, the component must be closed and strongly
    connected """
    states = [state for state in chain.states if state in component]
    for state in states:
        for edge in chain.edges(state):
            if edge.target not in component:
                raise QLATKError(f"component is not closed: {state!r} leaves it")
    if len(sccs(chain_graph(chain).subgraph(states))) != 1:
        raise QLATKError("component is not strongly connected")
    position = {state: i for i, state in enumerate(states)}
    size = len(states)
    # rows 0..size-2: balance equations, last row: normalization
    matrix = [[Fraction(0)] * size for _ in range(size)]
    rhs = [Fraction(0)] * size
    for state in states:
        for edge in chain.edges(state):
            target_row = position[edge.target]
            if target_row < size - 1:
                matrix[target_row][position[state]] += edge.prob
    for i in range(size - 1):
        matrix[i][i] -= 1
    matrix[size - 1] = [Fraction(1)] * size
    rhs[size - 1] = Fraction(1)
    solution = solve_linear(LinearSystem(matrix, rhs))
    return {state: solution[position[state]] for state in states}


def stationary_mean(
    chain: MarkovChain,
    weight_of: typing.Callable[[State, MarkovEdge], Fraction],
    component: typing.Collection[State],
) -> Fraction:
    """ Long-run average edge weight inside a bottom component """
    distribution = stationary_distribution(chain, component)
    return sum(
        (
            probability * edge.prob * weight_of(state, edge)
            for state, probability in distribution.items()
            for edge in chain.edges(state)
        ),
        Fraction(0),
    )
