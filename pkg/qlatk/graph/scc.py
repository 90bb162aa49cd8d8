import typing
from dataclasses import dataclass

import networkx as nx

from .digraph import Node, WeightedDigraph


@dataclass(frozen=True)
class Component:
    nodes: typing.FrozenSet[Node]
    trivial: bool

    def __contains__(self, node: Node) -> bool:
        return node in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)


def sccs(graph: WeightedDigraph) -> typing.List[Component]:
    """ Maximal strongly connected components in reverse topological order (sinks first).
    A component is trivial when it is a single node without a self-loop """
    nx_graph = graph.to_networkx()
    condensed = nx.condensation(nx_graph)
    first_node = {
        component: min(graph.index(node) for node in condensed.nodes[component]["members"])
        for component in condensed.nodes
    }
    order = list(
        nx.lexicographical_topological_sort(condensed, key=lambda component: first_node[component])
    )
    components = []
    for component in reversed(order):
        members = frozenset(condensed.nodes[component]["members"])
        trivial = len(members) == 1 and not any(
            edge.target == edge.source for node in members for edge in graph.out_edges(node)
        )
        components.append(Component(members, trivial))
    return components


def component_map(components: typing.Iterable[Component]) -> typing.Dict[Node, int]:
    """ Node -> position of its component """
    return {node: i for i, component in enumerate(components) for node in component.nodes}


def bottom_components(graph: WeightedDigraph) -> typing.List[Component]:
    components = sccs(graph)
    return [
        component
        for component in components
        if all(
            edge.target in component.nodes
            for node in component.nodes
            for edge in graph.out_edges(node)
        )
    ]
