import itertools
import typing
from dataclasses import dataclass
from fractions import Fraction

from qlatk.core.aggregator import WordAggregator
from qlatk.core.buchi import BuchiAutomaton, empty_automaton
from qlatk.core.outcome import Decision
from qlatk.core.spec import QlaSpec
from qlatk.exception_factory import UnsupportedAggregationError
from qlatk.modules import logger
from qlatk.omega import is_infinite, lasso_automaton, union
from qlatk.qwa import LassoProfiles

ValuePair = typing.Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Candidate:
    """ Language made of one word per finite class and every word of the infinite classes """

    finite: typing.Tuple[ValuePair, ...] = ()
    infinite: typing.Tuple[ValuePair, ...] = ()


def _check(spec: QlaSpec) -> None:
    if WordAggregator.EXP in (spec.h, spec.g) or not spec.f.is_standard:
        raise UnsupportedAggregationError(
            f"inclusion needs lattice aggregators, got h={spec.h.value} g={spec.g.value} "
            f"f={spec.f.value}"
        )


def candidates(
    realized: typing.Sequence[ValuePair], infinite: typing.Sequence[ValuePair]
) -> typing.Iterator[Candidate]:
    """ A violating language keeps violating once shrunk to the word (or infinite class)
    deciding each side, so languages of at most two parts suffice """
    for size in (1, 2):
        for chosen in itertools.combinations(infinite, size):
            yield Candidate(infinite=chosen)
    for word in realized:
        yield Candidate(finite=(word,))
        for chosen in infinite:
            yield Candidate(finite=(word,), infinite=(chosen,))
    for chosen in itertools.combinations(realized, 2):
        yield Candidate(finite=chosen)
    yield Candidate()


def language_value(
    h: WordAggregator, candidate: Candidate, side: int, bottom: Fraction, top: Fraction
) -> Fraction:
    if h.is_limit:
        values = [pair[side] for pair in candidate.infinite]
    else:
        values = [pair[side] for pair in candidate.finite + candidate.infinite]
    if not values:
        return bottom if h.is_sup_like else top
    return max(values) if h.is_sup_like else min(values)


def side_extremes(
    h: WordAggregator,
    profiles: LassoProfiles,
    infinite: typing.Sequence[ValuePair],
    side: int,
) -> typing.Tuple[Fraction, Fraction]:
    """ Bottom and top of one side; a limit h takes them over the infinite values """
    values = [pair[side] for pair in infinite]
    if h.is_limit and values:
        return min(values), max(values)
    return profiles.bottom(side), profiles.top(side)


def qla_inclusion(lhs: QlaSpec, rhs: QlaSpec, strict: bool = False) -> Decision:
    """ Whether lhs(S) >= rhs(S) (> when strict) for every language S. A failing answer
    carries an automaton of a violating language """
    _check(lhs)
    _check(rhs)
    profiles = LassoProfiles([lhs.qwa, rhs.qwa])
    classes: typing.Dict[ValuePair, list] = {}
    for pair in profiles.pairs:
        values = (profiles.word_value(pair, 0), profiles.word_value(pair, 1))
        classes.setdefault(values, []).append(pair)
    realized = sorted(classes)
    infinite = [values for values in realized if is_infinite(profiles.language(classes[values]))]
    extremes = [
        side_extremes(spec.h, profiles, infinite, side) for side, spec in enumerate((lhs, rhs))
    ]
    logger.debug(f"{len(realized)} value pairs, {len(infinite)} of them infinitely often")

    for candidate in candidates(realized, infinite):
        left = language_value(lhs.h, candidate, 0, *extremes[0])
        right = language_value(rhs.h, candidate, 1, *extremes[1])
        if not (left > right if strict else left >= right):
            logger.debug(f"{candidate} has value {left} against {right}")
            return Decision(False, _witness(profiles, classes, candidate))
    return Decision(True)


def _witness(
    profiles: LassoProfiles, classes: typing.Dict[ValuePair, list], candidate: Candidate
) -> BuchiAutomaton:
    alphabet = profiles.monoid.alphabet
    parts = [profiles.language(classes[values]) for values in candidate.infinite] + [
        lasso_automaton(profiles.lasso(classes[values][0]), alphabet)
        for values in candidate.finite
    ]
    if not parts:
        return empty_automaton(alphabet)
    automaton = parts[0]
    for part in parts[1:]:
        automaton = union(automaton, part)
    return automaton
