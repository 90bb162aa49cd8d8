from .conversions import lift_word_agg_to_limit, lower_limit_word_agg, to_limit_run_aggregator
from .evaluation import eval_lasso, lasso_sweep, lassos
from .extremum import bottom_value, negate, top_value
from .inf_runs import inf_runs_automaton
from .position_graph import (
    RunGraph,
    best_run_value,
    position_graph,
    system_graph,
    worst_run_value,
)
from .profile import LassoProfiles, RunValues, limit_form, run_value_sets
from .threshold import (
    RunTracker,
    ThresholdRelation,
    exact_runs_automaton,
    has_parallel_transitions,
    threshold_automaton,
    value_language,
)
