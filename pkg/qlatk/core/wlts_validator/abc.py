import typing
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

if typing.TYPE_CHECKING:
    from qlatk.core.wlts import Wlts


class ViolationKind(Enum):
    COMPLETENESS = "completeness"
    PROBABILITY_SUM = "probability-sum"
    NONPOSITIVE_PROBABILITY = "nonpositive-probability"
    INITIAL_DISTRIBUTION = "initial-distribution"
    UNKNOWN_STATE = "unknown-state"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    state: typing.Any = None
    letter: typing.Optional[str] = None
    detail: str = ""

    def __str__(self) -> str:
        where = f" at ({self.state}, {self.letter})" if self.letter is not None else ""
        if self.letter is None and self.state is not None:
            where = f" at {self.state}"
        return f"{self.kind.value} violation{where}{': ' + self.detail if self.detail else ''}"


class ABCWltsValidator(ABC):
    """ Abstract Wlts Validator class
    Documentation: docs/core/wlts.md
    """

    @abstractmethod
    def validate(self, system: "Wlts") -> typing.List[Violation]:
        pass

    def __repr__(self):
        return f"<{self.__class__.__name__}>"
