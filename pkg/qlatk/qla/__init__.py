from .decision import (
    decide_approximate_nonemptiness,
    decide_nonemptiness,
    decide_universality,
    qla_bot,
    qla_top,
)
from .evaluation import eval_regular, refine_deterministic, restricted_runs
from .extremes import LimitExtremes, infinite_values, limit_extremes
from .inclusion import Candidate, qla_inclusion, side_extremes
from .routing import (
    ALGORITHM,
    Problem,
    ProblemVariant,
    Restriction,
    Route,
    RouteKind,
    evaluation_route,
    nonemptiness_route,
    route,
    routing_table,
    universality_route,
)
