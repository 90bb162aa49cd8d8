import typing
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from qlatk.exception_factory import InvalidSystemError
from qlatk.modules import logger

from .digraph import Edge, Node, WeightedDigraph
from .linear import LinearSystem, solve_linear


class Optimize(Enum):
    MAX = "max"
    MIN = "min"

    def better(self, candidate: Fraction, current: Fraction) -> bool:
        return candidate > current if self is Optimize.MAX else candidate < current


@dataclass(frozen=True)
class DiscountedSolution:
    values: typing.Dict[Node, Fraction]
    strategy: typing.Dict[Node, Edge]

    def __getitem__(self, node: Node) -> Fraction:
        return self.values[node]


def discounted_best_value(
    graph: WeightedDigraph,
    discount: Fraction,
    mode: typing.Union[str, Optimize] = Optimize.MAX,
) -> DiscountedSolution:
    """ Optimal discounted sum from every node: v(n) = opt over edges of w + discount * v(dst).
    Solved by policy iteration, every policy is evaluated exactly; the returned strategy is
    positional and attains the values """
    mode = Optimize(mode)
    stuck = [node for node in graph.nodes if not graph.out_edges(node)]
    if stuck:
        raise InvalidSystemError(f"nodes {stuck[:5]} have no outgoing edge")

    strategy = {node: graph.out_edges(node)[0] for node in graph.nodes}
    rounds = 0
    while True:
        rounds += 1
        values = evaluate_policy(graph, strategy, discount)
        improved = False
        for node in graph.nodes:
            current = strategy[node]
            best, best_value = current, current.weight + discount * values[current.target]
            for edge in graph.out_edges(node):
                value = edge.weight + discount * values[edge.target]
                if mode.better(value, best_value):
                    best, best_value = edge, value
            if best is not current:
                strategy[node] = best
                improved = True
        if not improved:
            logger.debug(f"Policy iteration on {graph!r} stabilized after {rounds} rounds")
            return DiscountedSolution(values, strategy)


def evaluate_policy(
    graph: WeightedDigraph, strategy: typing.Dict[Node, Edge], discount: Fraction
) -> typing.Dict[Node, Fraction]:
    """ (I - discount * P) v = w for the positional choice """
    size = len(graph.nodes)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    rhs = [Fraction(0)] * size
    for node in graph.nodes:
        i, edge = graph.index(node), strategy[node]
        matrix[i][i] += 1
        matrix[i][graph.index(edge.target)] -= discount
        rhs[i] = edge.weight
    solution = solve_linear(LinearSystem(matrix, rhs))
    return {node: solution[graph.index(node)] for node in graph.nodes}


def lasso_discounted_sum(
    stem: typing.Sequence[Fraction], cycle: typing.Sequence[Fraction], discount: Fraction
) -> Fraction:
    """ Discounted sum of stem · cycle^ω """
    total = Fraction(0)
    factor = Fraction(1)
    for weight in stem:
        total += factor * weight
        factor *= discount
    cycle_sum = Fraction(0)
    cycle_factor = Fraction(1)
    for weight in cycle:
        cycle_sum += cycle_factor * weight
        cycle_factor *= discount
    return total + factor * cycle_sum / (1 - cycle_factor)
