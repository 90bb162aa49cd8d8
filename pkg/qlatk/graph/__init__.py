from .digraph import Edge, WeightedDigraph
from .discounted import (
    DiscountedSolution,
    Optimize,
    discounted_best_value,
    evaluate_policy,
    lasso_discounted_sum,
)
from .linear import LinearSystem, solve, solve_linear
from .markov_analysis import (
    BottomComponent,
    absorption_probabilities,
    bsccs,
    stationary_distribution,
    stationary_mean,
)
from .mean_cycle import MeanCycle, cycle_mean, max_mean_cycle, min_mean_cycle
from .scc import Component, bottom_components, component_map, sccs
