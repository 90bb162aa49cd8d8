import typing

from qlatk.core.buchi import BuchiAutomaton
from qlatk.core.config import get_settings

from .abc import ABCComplement
from .ramsey import RamseyComplement
from .rank import RankComplement

DEFAULT_COMPLEMENTS: typing.Dict[str, ABCComplement] = {
    "ramsey": RamseyComplement(),
    "rank": RankComplement(),
}


def complement(
    automaton: BuchiAutomaton, construction: typing.Optional[str] = None
) -> BuchiAutomaton:
    """ Automaton of the complement language. Small inputs use level rankings, the others
    the Ramsey construction, unless a construction is named """
    if construction is None:
        small = len(automaton.states) <= get_settings().rank_complement_limit
        construction = "rank" if small else "ramsey"
    return DEFAULT_COMPLEMENTS[construction].complement(automaton)


__all__ = (
    "ABCComplement",
    "DEFAULT_COMPLEMENTS",
    "RamseyComplement",
    "RankComplement",
    "complement",
)
