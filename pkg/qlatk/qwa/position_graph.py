import typing
from dataclasses import dataclass

from qlatk.core.aggregator import RunAggregator
from qlatk.core.lasso import LassoWord
from qlatk.core.value import ExtValue
from qlatk.core.wlts import Wlts
from qlatk.exception_factory import UnsupportedAggregationError
from qlatk.graph import Optimize, WeightedDigraph, discounted_best_value, max_mean_cycle, sccs

Node = typing.Hashable


@dataclass(frozen=True)
class RunGraph:
    """ Graph whose infinite paths from the initial nodes are the runs of a system,
    edge labels are (letter, probability) """

    graph: WeightedDigraph
    initial: typing.Tuple[Node, ...]

    def reachable_part(self) -> "RunGraph":
        return RunGraph(self.graph.subgraph(self.graph.reachable(self.initial)), self.initial)

    def negated(self) -> "RunGraph":
        return RunGraph(self.graph.map_weights(lambda weight: -weight), self.initial)


def system_graph(system: Wlts) -> RunGraph:
    """ Runs over all words at once """
    graph = WeightedDigraph(system.states)
    for state, letter, transition in system.edges():
        graph.add_edge(state, transition.weight, transition.target, (letter, transition.prob))
    return RunGraph(graph, system.initial_states)


def position_graph(system: Wlts, word: LassoWord) -> RunGraph:
    """ Product of the system with the positions of a lasso word, nodes are (state, position) """
    graph = WeightedDigraph(
        (state, position) for position in range(word.size) for state in system.states
    )
    for position in range(word.size):
        letter = word.letter_at(position)
        following = word.next_position(position)
        for state in system.states:
            for transition in system.successors(state, letter):
                graph.add_edge(
                    (state, position),
                    transition.weight,
                    (transition.target, following),
                    (letter, transition.prob),
                )
    return RunGraph(graph, tuple((state, 0) for state in system.initial_states))


def best_run_value(
    runs: RunGraph, f: RunAggregator, discount: typing.Optional[typing.Any] = None
) -> ExtValue:
    """ Supremum of f over the runs, every node must have a successor """
    runs = runs.reachable_part()
    graph = runs.graph
    weights = sorted({edge.weight for edge in graph.edges}, reverse=True)

    if f is RunAggregator.SUP:
        return ExtValue.of(weights[0])
    elif f is RunAggregator.INF:
        for weight in weights:
            heavy = graph.filter_edges(lambda edge: edge.weight >= weight)
            if has_cycle(heavy.subgraph(heavy.reachable(runs.initial))):
                return ExtValue.of(weight)
    elif f is RunAggregator.LIM_SUP:
        return ExtValue.of(
            max(
                edge.weight
                for component in sccs(graph)
                if not component.trivial
                for node in component.nodes
                for edge in graph.out_edges(node)
                if edge.target in component
            )
        )
    elif f is RunAggregator.LIM_INF:
        for weight in weights:
            if has_cycle(graph.filter_edges(lambda edge: edge.weight >= weight)):
                return ExtValue.of(weight)
    elif f.is_average:
        return max_mean_cycle(graph).value
    elif f is RunAggregator.DSUM:
        solution = discounted_best_value(graph, discount, Optimize.MAX)
        return ExtValue.of(max(solution[node] for node in runs.initial))
    raise UnsupportedAggregationError(f"no run of {runs.graph!r} is infinite")


def worst_run_value(
    runs: RunGraph, f: RunAggregator, discount: typing.Optional[typing.Any] = None
) -> ExtValue:
    return -best_run_value(runs.negated(), f.dual, discount)


def has_cycle(graph: WeightedDigraph) -> bool:
    return any(not component.trivial for component in sccs(graph))
