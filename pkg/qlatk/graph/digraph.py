import typing
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

Node = typing.Hashable


@dataclass(frozen=True)
class Edge:
    source: Node
    weight: Fraction
    target: Node
    label: typing.Any = None


class WeightedDigraph:
    """ Multigraph with exact weights, nodes and edges keep insertion order
    Documentation: docs/graph.md
    """

    def __init__(self, nodes: typing.Iterable[Node] = (), edges: typing.Iterable[Edge] = ()):
        self.nodes: typing.List[Node] = []
        self.edges: typing.List[Edge] = []
        self._index: typing.Dict[Node, int] = {}
        self._out: typing.Dict[Node, typing.List[Edge]] = {}
        for node in nodes:
            self.add_node(node)
        for edge in edges:
            self.add_edge(edge.source, edge.weight, edge.target, edge.label)

    def add_node(self, node: Node) -> "WeightedDigraph":
        if node not in self._index:
            self._index[node] = len(self.nodes)
            self.nodes.append(node)
            self._out[node] = []
        return self

    def add_edge(
        self,
        source: Node,
        weight: typing.Union[int, Fraction],
        target: Node,
        label: typing.Any = None,
    ) -> "WeightedDigraph":
        self.add_node(source).add_node(target)
        edge = Edge(source, Fraction(weight), target, label)
        self.edges.append(edge)
        self._out[source].append(edge)
        return self

    def index(self, node: Node) -> int:
        return self._index[node]

    def out_edges(self, node: Node) -> typing.List[Edge]:
        return self._out[node]

    def __contains__(self, node: Node) -> bool:
        return node in self._index

    def __len__(self) -> int:
        return len(self.nodes)

    def subgraph(self, nodes: typing.Iterable[Node]) -> "WeightedDigraph":
        """ Induced subgraph, node order follows this graph """
        keep = set(nodes)
        return WeightedDigraph(
            (node for node in self.nodes if node in keep),
            (edge for edge in self.edges if edge.source in keep and edge.target in keep),
        )

    def filter_edges(self, predicate: typing.Callable[[Edge], bool]) -> "WeightedDigraph":
        return WeightedDigraph(self.nodes, (edge for edge in self.edges if predicate(edge)))

    def map_weights(self, function: typing.Callable[[Fraction], Fraction]) -> "WeightedDigraph":
        return WeightedDigraph(
            self.nodes,
            (Edge(e.source, function(e.weight), e.target, e.label) for e in self.edges),
        )

    def to_networkx(self) -> nx.MultiDiGraph:
        """ Edge keys are positions in `edges` """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from((e.source, e.target, i) for i, e in enumerate(self.edges))
        return graph

    def reachable(self, sources: typing.Iterable[Node]) -> typing.Set[Node]:
        graph = self.to_networkx()
        reached: typing.Set[Node] = set()
        for source in sources:
            if source in self._index and source not in reached:
                reached.add(source)
                reached.update(nx.descendants(graph, source))
        return reached

    def coreachable(self, targets: typing.Iterable[Node]) -> typing.Set[Node]:
        """ Nodes with a path into targets, targets included """
        graph = self.to_networkx()
        reached: typing.Set[Node] = set()
        for target in targets:
            if target in self._index and target not in reached:
                reached.add(target)
                reached.update(nx.ancestors(graph, target))
        return reached

    def __repr__(self) -> str:
        return f"<WeightedDigraph nodes={len(self.nodes)} edges={len(self.edges)}>"
