import typing
from fractions import Fraction

from qlatk.core.aggregator import WordAggregator
from qlatk.core.outcome import Decision, EvalOutcome, Unsupported, Value
from qlatk.core.spec import QlaSpec
from qlatk.core.value import ExtValue
from qlatk.modules import logger
from qlatk.qwa import negate, top_value

from .extremes import limit_extremes
from .routing import ProblemVariant, nonemptiness_route, universality_route

Number = typing.Union[int, Fraction]


def _refine_for_decision(spec: QlaSpec) -> QlaSpec:
    qwa = spec.qwa
    if qwa.g.is_limit or qwa.g is WordAggregator.SUP or not qwa.system.is_deterministic():
        return spec
    return QlaSpec(spec.h, qwa.with_aggregators(g=WordAggregator.SUP))


def qla_top(spec: QlaSpec) -> EvalOutcome:
    """ Largest value of a language. For h in {Inf, Sup, E} this is the top of the word
    automaton; for a limit h it is the largest value taken by infinitely many words """
    spec = _refine_for_decision(spec)
    if not spec.h.is_limit:
        return top_value(spec.qwa)
    elif spec.g is WordAggregator.EXP or not spec.f.is_standard:
        return nonemptiness_route(spec.h, spec.g, spec.f).outcome()
    return Value(limit_extremes(spec.qwa).top)


def qla_bot(spec: QlaSpec) -> EvalOutcome:
    return negate(qla_top(spec.dual()))


def decide_nonemptiness(
    spec: QlaSpec, k: Number, variant: ProblemVariant = ProblemVariant()
) -> EvalOutcome:
    """ Whether some language has value at least k (above k when strict). The top value is
    attained by a lasso-word language in every decidable cell, so comparing against it
    covers the finite-state restriction as well """
    spec = _refine_for_decision(spec)
    route = nonemptiness_route(spec.h, spec.g, spec.f, variant)
    if not route.is_algorithm:
        return route.outcome()
    top = qla_top(spec)
    if isinstance(top, Unsupported):
        return top
    k = ExtValue.of(k)
    holds = top.value > k if variant.strict else top.value >= k
    logger.debug(f"Top value {top.value} against {k}: {holds}")
    return Decision(holds, top.witness if holds else None)


def decide_universality(
    spec: QlaSpec, k: Number, variant: ProblemVariant = ProblemVariant()
) -> EvalOutcome:
    """ Every language has value at least k iff no language of the dual has value above -k """
    spec = _refine_for_decision(spec)
    dual = _refine_for_decision(spec.dual())
    flipped = ProblemVariant(not variant.strict, variant.restriction)
    # refining the dual only turns refusals into algorithms
    if not nonemptiness_route(dual.h, dual.g, dual.f, flipped).is_algorithm:
        return universality_route(spec.h, spec.g, spec.f, variant).outcome()
    answer = decide_nonemptiness(dual, -Fraction(k), flipped)
    if isinstance(answer, Unsupported):
        return answer
    return Decision(not answer.holds)


def decide_approximate_nonemptiness(spec: QlaSpec, k: Number) -> EvalOutcome:
    """ Whether languages come arbitrarily close to k from below """
    spec = _refine_for_decision(spec)
    route = nonemptiness_route(spec.h, spec.g, spec.f)
    if not route.is_algorithm:
        return route.outcome()
    top = qla_top(spec)
    if isinstance(top, Unsupported):
        return top
    return Decision(top.value >= ExtValue.of(k))
