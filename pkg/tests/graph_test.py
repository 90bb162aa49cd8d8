from fractions import Fraction

import pytest

from qlatk import MINUS_INFINITY, MarkovBuilder, QLATKError, SingularSystemError
from qlatk.graph import (
    LinearSystem,
    Optimize,
    WeightedDigraph,
    bottom_components,
    bsccs,
    cycle_mean,
    discounted_best_value,
    lasso_discounted_sum,
    max_mean_cycle,
    min_mean_cycle,
    sccs,
    solve,
    solve_linear,
    stationary_distribution,
    stationary_mean,
)

HALF = Fraction(1, 2)


def two_cycles() -> WeightedDigraph:
    return WeightedDigraph().add_edge("a", 1, "b").add_edge("b", 3, "a").add_edge("a", 1, "a")


def test_sccs_sinks_first():
    graph = WeightedDigraph().add_edge(0, 0, 1).add_edge(1, 0, 1).add_edge(2, 0, 0)
    components = sccs(graph)
    assert [set(c.nodes) for c in components] == [{1}, {0}, {2}]
    assert [c.trivial for c in components] == [False, True, True]
    assert [set(c.nodes) for c in bottom_components(graph)] == [{1}]


def test_reachability():
    graph = WeightedDigraph([3]).add_edge(0, 0, 1).add_edge(1, 0, 2)
    assert graph.reachable([1]) == {1, 2}
    assert graph.coreachable([1]) == {0, 1}
    assert len(graph.subgraph([0, 1, 3]).edges) == 1


def test_mean_cycles():
    graph = two_cycles()
    best = max_mean_cycle(graph)
    assert best.value == 2
    assert cycle_mean(best.cycle) == 2
    worst = min_mean_cycle(graph)
    assert worst.mean == 1
    assert [edge.weight for edge in worst.cycle] == [1]


def test_mean_cycle_acyclic():
    result = max_mean_cycle(WeightedDigraph().add_edge(0, 5, 1))
    assert result.value == MINUS_INFINITY
    assert result.cycle == ()


def test_discounted_best_value():
    graph = WeightedDigraph().add_edge("q", 0, "q").add_edge("q", 1, "q").add_edge("p", 0, "q")
    best = discounted_best_value(graph, HALF)
    assert best["q"] == 2
    assert best["p"] == 1
    assert best.strategy["q"].weight == 1
    worst = discounted_best_value(graph, HALF, Optimize.MIN)
    assert worst["q"] == 0


def test_lasso_discounted_sum():
    assert lasso_discounted_sum([0, 0, 0], [1], HALF) == Fraction(1, 4)
    assert lasso_discounted_sum([], [1, 0], HALF) == Fraction(4, 3)


def test_solve():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    with pytest.raises(SingularSystemError):
        solve([[1, 1], [2, 2]], [1, 2])


def test_solve_linear_pivoting():
    assert solve_linear(LinearSystem([[0, 1], [1, 0]], [2, 3])) == [3, 2]
    assert solve_linear(LinearSystem([[1, 2], [3, 4]], [5, 6])) == [-4, Fraction(9, 2)]
    with pytest.raises(QLATKError):
        LinearSystem([[1, 2]], [1])


def test_bottom_components_of_chain():
    chain = (
        MarkovBuilder()
        .add(0, "a", Fraction(1, 3), 1)
        .add(0, "b", Fraction(2, 3), 2)
        .add(1, "a", 1, 1)
        .add(2, "b", 1, 2)
        .build()
    )
    probabilities = {next(iter(b.states)): b.probability for b in bsccs(chain)}
    assert probabilities == {1: Fraction(1, 3), 2: Fraction(2, 3)}


def test_stationary():
    chain = (
        MarkovBuilder()
        .add(0, "a", 1, 1)
        .add(1, "b", HALF, 0)
        .add(1, "a", HALF, 1)
        .build()
    )
    assert stationary_distribution(chain, {0, 1}) == {0: Fraction(1, 3), 1: Fraction(2, 3)}
    mean = stationary_mean(chain, lambda state, edge: Fraction(edge.letter == "a"), {0, 1})
    assert mean == Fraction(2, 3)


def test_stationary_needs_bottom_component():
    chain = MarkovBuilder().add(0, "a", 1, 1).add(1, "a", 1, 1).build()
    with pytest.raises(QLATKError):
        stationary_distribution(chain, {0, 1})
    with pytest.raises(QLATKError):
        stationary_distribution(chain, {0})
    assert stationary_distribution(chain, {1}) == {1: Fraction(1)}
