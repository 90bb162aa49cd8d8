import typing
from dataclasses import dataclass

import networkx as nx

from qlatk.core.buchi import BuchiAutomaton
from qlatk.core.lasso import LassoWord
from qlatk.graph import Edge, WeightedDigraph, sccs
from qlatk.modules import logger

from .product import cobuchi_to_buchi

State = typing.Hashable


@dataclass(frozen=True)
class LassoWitness:
    word: LassoWord
    run: typing.Optional[typing.Tuple[State, ...]] = None


@dataclass(frozen=True)
class EmptinessResult:
    empty: bool
    witness: typing.Optional[LassoWitness] = None


def automaton_graph(automaton: BuchiAutomaton) -> WeightedDigraph:
    """ Transition graph, edge labels are letters """
    graph = WeightedDigraph(automaton.states)
    for source, letter, target in automaton.edges():
        graph.add_edge(source, 0, target, letter)
    return graph


def shortest_path(
    graph: WeightedDigraph, sources: typing.Iterable[State], target: State
) -> typing.Optional[typing.List[Edge]]:
    nx_graph = graph.to_networkx()
    best: typing.Optional[typing.List[State]] = None
    for source in sources:
        if source not in graph:
            continue
        try:
            nodes = nx.shortest_path(nx_graph, source, target)
        except nx.NetworkXNoPath:
            continue
        if best is None or len(nodes) < len(best):
            best = nodes
    if best is None:
        return None
    return [
        next(edge for edge in graph.out_edges(source) if edge.target == target)
        for source, target in zip(best, best[1:])
    ]


def shortest_cycle(graph: WeightedDigraph, node: State) -> typing.Optional[typing.List[Edge]]:
    """ Shortest nonempty cycle through node """
    best: typing.Optional[typing.List[Edge]] = None
    for edge in graph.out_edges(node):
        rest = shortest_path(graph, [edge.target], node)
        if rest is not None and (best is None or len(rest) + 1 < len(best)):
            best = [edge] + rest
    return best


def accepting_components(automaton: BuchiAutomaton) -> typing.Tuple[WeightedDigraph, list]:
    """ Reachable transition graph and its nontrivial SCCs holding an accepting state """
    graph = automaton_graph(automaton)
    graph = graph.subgraph(graph.reachable(automaton.initial))
    components = [
        component
        for component in sccs(graph)
        if not component.trivial and any(automaton.is_accepting(s) for s in component.nodes)
    ]
    return graph, components


def is_empty(automaton: BuchiAutomaton) -> EmptinessResult:
    """ Nonemptiness check by SCC decomposition, a nonempty language comes with an accepted
    lasso word and its run """
    automaton = cobuchi_to_buchi(automaton)
    graph, components = accepting_components(automaton)
    if not components:
        logger.debug(f"{automaton!r} is empty")
        return EmptinessResult(True)

    component = components[0]
    state = next(s for s in graph.nodes if s in component and automaton.is_accepting(s))
    inner = graph.subgraph(component.nodes)
    stem = shortest_path(graph, automaton.initial, state) or []
    cycle = shortest_cycle(inner, state) or []
    word = LassoWord.of((edge.label for edge in stem), (edge.label for edge in cycle))
    run = tuple(edge.source for edge in stem) + tuple(edge.source for edge in cycle)
    return EmptinessResult(False, LassoWitness(word, run))
