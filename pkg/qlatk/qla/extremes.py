import typing
from dataclasses import dataclass
from fractions import Fraction

from qlatk.core.aggregator import WordAggregator
from qlatk.core.spec import QwaSpec
from qlatk.core.value import ExtValue
from qlatk.modules import logger
from qlatk.omega import is_infinite
from qlatk.qwa import LassoProfiles, bottom_value, top_value, value_language


def infinite_values(qwa: QwaSpec) -> typing.List[Fraction]:
    """ Word values taken by infinitely many words """
    if qwa.g is WordAggregator.SUP:
        return [x for x in qwa.system.weights() if is_infinite(value_language(qwa, x))]
    profiles = LassoProfiles([qwa])
    classes: typing.Dict[Fraction, list] = {}
    for pair in profiles.pairs:
        classes.setdefault(profiles.word_value(pair, 0), []).append(pair)
    return sorted(
        value for value, pairs in classes.items() if is_infinite(profiles.language(pairs))
    )


@dataclass(frozen=True)
class LimitExtremes:
    """ Bottom and top of a language automaton with a limit language aggregator """

    bottom: ExtValue
    top: ExtValue

    def of(self, h: WordAggregator) -> ExtValue:
        """ Value of a language holding finitely many words of each value """
        return self.bottom if h is WordAggregator.LIM_SUP else self.top


def limit_extremes(qwa: QwaSpec) -> LimitExtremes:
    """ Every infinite language puts infinitely many words on one of the infinite values,
    and the whole value class of such a value reaches it, so these are the smallest and
    the largest infinite value """
    values = infinite_values(qwa)
    if values:
        return LimitExtremes(ExtValue.of(min(values)), ExtValue.of(max(values)))
    # a single word over a one-letter alphabet
    logger.debug("No value is taken by infinitely many words")
    return LimitExtremes(bottom_value(qwa).value, top_value(qwa).value)
