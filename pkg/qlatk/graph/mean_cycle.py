import typing
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from qlatk.core.value import MINUS_INFINITY, ExtValue
from qlatk.modules import logger

from .digraph import Edge, Node, WeightedDigraph
from .scc import sccs


@dataclass(frozen=True)
class MeanCycle:
    value: ExtValue
    cycle: typing.Tuple[Edge, ...] = ()

    @property
    def mean(self) -> Fraction:
        return self.value.fraction


def max_mean_cycle(graph: WeightedDigraph) -> MeanCycle:
    """ Maximum over all cycles of the mean edge weight (Karp) with a cycle attaining it,
    -inf with no cycle for acyclic graphs """
    best = MeanCycle(MINUS_INFINITY)
    for component in sccs(graph):
        if component.trivial:
            continue
        subgraph = graph.subgraph(component.nodes)
        value = _karp(subgraph)
        if best.value < value:
            best = MeanCycle(ExtValue.of(value), _witness(subgraph, value))
    logger.debug(f"Maximum mean cycle of {graph!r} is {best.value}")
    return best


def min_mean_cycle(graph: WeightedDigraph) -> MeanCycle:
    result = max_mean_cycle(graph.map_weights(lambda weight: -weight))
    return MeanCycle(-result.value, tuple(_restore(graph, result.cycle)))


def _restore(graph: WeightedDigraph, cycle: typing.Iterable[Edge]) -> typing.Iterator[Edge]:
    for edge in cycle:
        yield Edge(edge.source, -edge.weight, edge.target, edge.label)


def _karp(graph: WeightedDigraph) -> Fraction:
    """ Karp's recurrence on a strongly connected graph with at least one edge """
    size = len(graph.nodes)
    source = graph.nodes[0]
    # walks[k][v]: maximum weight of a walk of exactly k edges from source to v
    walks: typing.List[typing.Dict[Node, typing.Optional[Fraction]]] = [
        {node: None for node in graph.nodes} for _ in range(size + 1)
    ]
    walks[0][source] = Fraction(0)
    for k in range(1, size + 1):
        for edge in graph.edges:
            before = walks[k - 1][edge.source]
            if before is None:
                continue
            candidate = before + edge.weight
            current = walks[k][edge.target]
            if current is None or candidate > current:
                walks[k][edge.target] = candidate

    best: typing.Optional[Fraction] = None
    for node in graph.nodes:
        last = walks[size][node]
        if last is None:
            continue
        worst = min(
            (last - walks[k][node]) / (size - k)  # type: ignore
            for k in range(size)
            if walks[k][node] is not None
        )
        if best is None or worst > best:
            best = worst
    return typing.cast(Fraction, best)


def _witness(graph: WeightedDigraph, mean: Fraction) -> typing.Tuple[Edge, ...]:
    """ A cycle of tight edges under longest-path potentials of the shifted weights """
    potential = {node: Fraction(0) for node in graph.nodes}
    for _ in range(len(graph.nodes) + 1):
        changed = False
        for edge in graph.edges:
            candidate = potential[edge.source] + edge.weight - mean
            if candidate > potential[edge.target]:
                potential[edge.target] = candidate
                changed = True
        if not changed:
            break

    tight = nx.MultiDiGraph()
    tight.add_nodes_from(graph.nodes)
    tight.add_edges_from(
        (edge.source, edge.target, i)
        for i, edge in enumerate(graph.edges)
        if potential[edge.source] + edge.weight - mean == potential[edge.target]
    )
    return tuple(graph.edges[key] for _, _, key in nx.find_cycle(tight))


def cycle_mean(cycle: typing.Sequence[Edge]) -> Fraction:
    return sum((edge.weight for edge in cycle), Fraction(0)) / len(cycle)
