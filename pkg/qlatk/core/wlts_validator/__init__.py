import typing

from .abc import ABCWltsValidator, Violation, ViolationKind
from .completeness import CompletenessValidator, TargetValidator
from .probability import InitialDistributionValidator, ProbabilityValidator

if typing.TYPE_CHECKING:
    from qlatk.core.wlts import Wlts

DEFAULT_WLTS_VALIDATORS = [
    TargetValidator(),
    InitialDistributionValidator(),
    CompletenessValidator(),
    ProbabilityValidator(),
]


def validate(
    system: "Wlts", validators: typing.Optional[typing.Iterable[ABCWltsValidator]] = None
) -> typing.List[Violation]:
    """ Collects the violations of every validator, in validator order """
    violations: typing.List[Violation] = []
    for validator in validators if validators is not None else DEFAULT_WLTS_VALIDATORS:
        violations.extend(validator.validate(system))
    return violations
