import typing

from .abc import ABCWltsValidator, Violation, ViolationKind

if typing.TYPE_CHECKING:
    from qlatk.core.wlts import Wlts


class CompletenessValidator(ABCWltsValidator):
    """ Every (state, letter) pair needs at least one transition """

    def validate(self, system: "Wlts") -> typing.List[Violation]:
        return [
            Violation(ViolationKind.COMPLETENESS, state, letter, "no transition")
            for state in system.states
            for letter in system.alphabet
            if not system.successors(state, letter)
        ]


class TargetValidator(ABCWltsValidator):
    def validate(self, system: "Wlts") -> typing.List[Violation]:
        known = set(system.states)
        violations = [
            Violation(ViolationKind.UNKNOWN_STATE, state, letter, f"target {t.target!r}")
            for state, letter, t in system.edges()
            if t.target not in known
        ]
        violations.extend(
            Violation(ViolationKind.UNKNOWN_STATE, state, None, "initial state")
            for state in system.initial
            if state not in known
        )
        return violations
