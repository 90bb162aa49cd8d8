import typing
from fractions import Fraction

from qlatk.core.buchi import BuchiAutomaton
from qlatk.core.spec import QwaSpec
from qlatk.exception_factory import UnsupportedAggregationError
from qlatk.modules import logger

from .profile import LassoProfiles


def inf_runs_automaton(
    spec: QwaSpec,
    value: typing.Union[int, Fraction],
    profiles: typing.Optional[LassoProfiles] = None,
) -> BuchiAutomaton:
    """ Words admitting infinitely many runs of the given value. The runs of a word of type
    s e^omega are the paths of its block graph, where a cycle branching off towards a path
    of that value yields one more run per round """
    if not spec.f.is_standard:
        raise UnsupportedAggregationError(f"cannot count {spec.f.value} runs")
    profiles = profiles or LassoProfiles([spec])
    value = Fraction(value)
    pairs = [pair for pair in profiles.pairs if value in profiles.run_values(pair, 0).infinite]
    logger.debug(f"{len(pairs)} lasso types have infinitely many runs of value {value}")
    return profiles.language(pairs)
