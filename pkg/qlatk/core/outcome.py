import typing
from dataclasses import dataclass
from enum import Enum

from .value import ExtValue


class UnsupportedReason(Enum):
    UNDECIDABLE = "UNDECIDABLE"
    OPEN_HARD = "OPEN_HARD"


@dataclass(frozen=True)
class Value:
    value: ExtValue
    witness: typing.Any = None

    def render(self) -> str:
        return f"VALUE {self.value.render()}"

    def to_dict(self) -> dict:
        return {"kind": "value", "value": self.value.render()}


@dataclass(frozen=True)
class Decision:
    holds: bool
    witness: typing.Any = None

    def render(self) -> str:
        return "YES" if self.holds else "NO"

    def to_dict(self) -> dict:
        return {"kind": "decision", "holds": self.holds}

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Unsupported:
    """ Structured refusal of a problem cell without an algorithm """

    reason: UnsupportedReason
    tag: str

    def render(self) -> str:
        return f"UNSUPPORTED {self.reason.value} {self.tag}"

    def to_dict(self) -> dict:
        return {"kind": "unsupported", "reason": self.reason.value, "tag": self.tag}


EvalOutcome = typing.Union[Value, Decision, Unsupported]

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNSUPPORTED = 2


def exit_code(outcome: EvalOutcome) -> int:
    return EXIT_UNSUPPORTED if isinstance(outcome, Unsupported) else EXIT_OK
