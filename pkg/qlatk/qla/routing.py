import itertools
import typing
from dataclasses import dataclass
from enum import Enum

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.outcome import Unsupported, UnsupportedReason
from qlatk.modules import logger

INF, SUP, EXP = WordAggregator.INF, WordAggregator.SUP, WordAggregator.EXP
LATTICE = (INF, SUP)


class RouteKind(Enum):
    ALGORITHM = "ALGORITHM"
    UNDECIDABLE = "UNDECIDABLE"
    OPEN_HARD = "OPEN_HARD"


class Problem(Enum):
    EVALUATION = "evaluation"
    NONEMPTINESS = "nonempty"
    UNIVERSALITY = "universal"


class Restriction(Enum):
    ANY = "any"
    FINITE_STATE = "finite"


@dataclass(frozen=True)
class ProblemVariant:
    """ Strict (>) or non-strict (>=) threshold, over all language generators or over
    finite-state ones """

    strict: bool = False
    restriction: Restriction = Restriction.ANY


@dataclass(frozen=True)
class Route:
    kind: RouteKind
    tag: typing.Optional[str] = None

    @property
    def is_algorithm(self) -> bool:
        return self.kind is RouteKind.ALGORITHM

    def outcome(self) -> Unsupported:
        return Unsupported(UnsupportedReason(self.kind.value), self.tag or "")

    def retagged(self, tag: str) -> "Route":
        return Route(self.kind, tag)

    def __str__(self) -> str:
        return self.kind.value if self.is_algorithm else f"{self.kind.value} {self.tag}"


ALGORITHM = Route(RouteKind.ALGORITHM)


def _undecidable(tag: str) -> Route:
    return Route(RouteKind.UNDECIDABLE, tag)


def _open(tag: str) -> Route:
    return Route(RouteKind.OPEN_HARD, tag)


def _limit_route(f: RunAggregator) -> Route:
    return ALGORITHM if f.is_standard else _open(f"limit:{f.family}")


def evaluation_route(h: WordAggregator, g: WordAggregator, f: RunAggregator) -> Route:
    """ Whether a QLA can be evaluated on omega-regular languages or Markov chains """
    if h in LATTICE and g in LATTICE:
        if h is g or f.is_standard:
            return ALGORITHM
        elif f.is_average:
            return _undecidable("evaluation:avg")
        return _open("evaluation:dsum")
    elif h in LATTICE and g is EXP:
        return _undecidable("evaluation:exp")
    elif h is EXP and g in LATTICE:
        if f.is_standard:
            return ALGORITHM
        elif f.is_average:
            return _undecidable("stochastic:avg")
        return _open("stochastic:dsum")
    elif h is EXP and g is EXP:
        return ALGORITHM
    elif h is EXP:
        return _open("stochastic:limit")
    elif g is EXP:
        return _open("limit:exp")
    return _limit_route(f)


def _nonemptiness(h: WordAggregator, g: WordAggregator, f: RunAggregator) -> Route:
    if h.is_limit:
        return _open("limit:exp") if g is EXP else _limit_route(f)
    elif g is SUP:
        return ALGORITHM
    elif g is INF:
        if f.is_standard:
            return ALGORITHM
        elif f.is_average:
            return _undecidable("emptiness:avg")
        return _open("emptiness:dsum")
    elif g is EXP:
        return _undecidable("emptiness:exp")
    return _limit_route(f)


def _finite_state_differs(
    h: WordAggregator, g: WordAggregator, f: RunAggregator, strict: bool
) -> bool:
    if g is INF and f.is_average:
        return h is EXP and not (f is RunAggregator.LIM_INF_AVG and strict)
    elif g is INF and f is RunAggregator.DSUM:
        return not (h is SUP or strict)
    elif g is EXP:
        return h is EXP and not (f is RunAggregator.DSUM and strict)
    return False


def nonemptiness_route(
    h: WordAggregator,
    g: WordAggregator,
    f: RunAggregator,
    variant: ProblemVariant = ProblemVariant(),
) -> Route:
    route = _nonemptiness(h, g, f)
    if (
        not route.is_algorithm
        and variant.restriction is Restriction.FINITE_STATE
        and _finite_state_differs(h, g, f, variant.strict)
    ):
        return _open(f"finite-state:{route.tag}")
    return route


def universality_route(
    h: WordAggregator,
    g: WordAggregator,
    f: RunAggregator,
    variant: ProblemVariant = ProblemVariant(),
) -> Route:
    """ A QLA is >=-universal for k iff its dual is not >-nonempty for -k """
    flipped = ProblemVariant(not variant.strict, variant.restriction)
    route = nonemptiness_route(h.dual, g.dual, f.dual, flipped)
    if route.tag:
        return route.retagged(route.tag.replace("emptiness:", "universality:", 1))
    return route


def route(
    problem: Problem,
    h: WordAggregator,
    g: WordAggregator,
    f: RunAggregator,
    variant: ProblemVariant = ProblemVariant(),
) -> Route:
    if problem is Problem.EVALUATION:
        chosen = evaluation_route(h, g, f)
    elif problem is Problem.NONEMPTINESS:
        chosen = nonemptiness_route(h, g, f, variant)
    else:
        chosen = universality_route(h, g, f, variant)
    logger.debug(f"{problem.value} h={h.value} g={g.value} f={f.value}: {chosen}")
    return chosen


TableRow = typing.Tuple[
    Problem, WordAggregator, WordAggregator, RunAggregator, ProblemVariant, Route
]


def routing_table() -> typing.List[TableRow]:
    """ Every problem cell with its route """
    rows = []
    for h, g, f in itertools.product(WordAggregator, WordAggregator, RunAggregator):
        rows.append((Problem.EVALUATION, h, g, f, ProblemVariant(), evaluation_route(h, g, f)))
        for problem in (Problem.NONEMPTINESS, Problem.UNIVERSALITY):
            for strict, restriction in itertools.product((False, True), Restriction):
                variant = ProblemVariant(strict, restriction)
                rows.append((problem, h, g, f, variant, route(problem, h, g, f, variant)))
    return rows
