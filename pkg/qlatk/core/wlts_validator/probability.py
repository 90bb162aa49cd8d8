import typing
from fractions import Fraction

from .abc import ABCWltsValidator, Violation, ViolationKind

if typing.TYPE_CHECKING:
    from qlatk.core.wlts import Wlts


class ProbabilityValidator(ABCWltsValidator):
    """ Per (state, letter) the probabilities are positive and sum to exactly one """

    def validate(self, system: "Wlts") -> typing.List[Violation]:
        violations = []
        for (state, letter), transitions in system.transitions.items():
            if not transitions:
                continue
            if any(t.prob <= 0 for t in transitions):
                violations.append(
                    Violation(ViolationKind.NONPOSITIVE_PROBABILITY, state, letter)
                )
            total = sum((t.prob for t in transitions), Fraction(0))
            if total != 1:
                violations.append(
                    Violation(ViolationKind.PROBABILITY_SUM, state, letter, f"sum is {total}")
                )
        return violations


class InitialDistributionValidator(ABCWltsValidator):
    def validate(self, system: "Wlts") -> typing.List[Violation]:
        probs = list(system.initial.values())
        if not probs:
            return [Violation(ViolationKind.INITIAL_DISTRIBUTION, detail="no initial state")]
        if any(p < 0 for p in probs) or sum(probs, Fraction(0)) != 1:
            return [
                Violation(
                    ViolationKind.INITIAL_DISTRIBUTION, detail="must be a distribution"
                )
            ]
        return []
