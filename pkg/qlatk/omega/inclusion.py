import typing
from dataclasses import dataclass

from qlatk.core.buchi import BuchiAutomaton

from .complement import complement
from .emptiness import LassoWitness, is_empty
from .product import check_alphabets, intersect


@dataclass(frozen=True)
class InclusionResult:
    holds: bool
    counterexample: typing.Optional[LassoWitness] = None

    def __bool__(self) -> bool:
        return self.holds


def includes(a: BuchiAutomaton, b: BuchiAutomaton) -> InclusionResult:
    """ Whether L(a) is a subset of L(b); a counterexample is a lasso word of L(a) \\ L(b) """
    check_alphabets(a.alphabet, b.alphabet)
    result = is_empty(intersect(a, complement(b)))
    if result.empty:
        return InclusionResult(True)
    return InclusionResult(False, LassoWitness(result.witness.word))
