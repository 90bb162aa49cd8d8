import re
import typing
from enum import Enum
from fractions import Fraction

from qlatk.exception_factory import QLATKError

RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(?:/\d+)?$")

Number = typing.Union[int, Fraction]


class ValueKind(Enum):
    MINUS_INFINITY = -1
    FINITE = 0
    PLUS_INFINITY = 1


def parse_rational(text: str) -> Fraction:
    """ Parses `p/q` or an integer. Decimal notation is rejected on purpose of exactness """
    text = text.strip()
    if not RATIONAL_PATTERN.match(text):
        raise QLATKError(f"{text!r} is not a rational of the form p/q")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise QLATKError(f"{text!r} has a zero denominator")
    return Fraction(int(numerator), int(denominator or 1))


def render_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class ExtValue:
    """ Extended rational: a Fraction, +inf or -inf, totally ordered """

    __slots__ = ("kind", "fraction")

    def __init__(self, kind: ValueKind, fraction: Fraction = Fraction(0)):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "fraction", fraction if kind is ValueKind.FINITE else None)

    def __setattr__(self, key, value):
        raise AttributeError("ExtValue is immutable")

    @classmethod
    def of(cls, value: typing.Union["ExtValue", Number]) -> "ExtValue":
        if isinstance(value, ExtValue):
            return value
        return cls(ValueKind.FINITE, Fraction(value))

    @classmethod
    def parse(cls, text: str) -> "ExtValue":
        text = text.strip()
        if text in ("inf", "+inf"):
            return PLUS_INFINITY
        elif text == "-inf":
            return MINUS_INFINITY
        return cls.of(parse_rational(text))

    @property
    def is_finite(self) -> bool:
        return self.kind is ValueKind.FINITE

    def _key(self) -> typing.Tuple[int, Fraction]:
        if self.kind is ValueKind.FINITE:
            return 0, self.fraction
        return self.kind.value, Fraction(0)

    def __neg__(self) -> "ExtValue":
        if self.kind is ValueKind.FINITE:
            return ExtValue(ValueKind.FINITE, -self.fraction)
        return ExtValue(ValueKind(-self.kind.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExtValue.of(other)
        if not isinstance(other, ExtValue):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __lt__(self, other) -> bool:
        return self._key() < ExtValue.of(other)._key()

    def __le__(self, other) -> bool:
        return self._key() <= ExtValue.of(other)._key()

    def __gt__(self, other) -> bool:
        return self._key() > ExtValue.of(other)._key()

    def __ge__(self, other) -> bool:
        return self._key() >= ExtValue.of(other)._key()

    def render(self) -> str:
        if self.kind is ValueKind.PLUS_INFINITY:
            return "inf"
        elif self.kind is ValueKind.MINUS_INFINITY:
            return "-inf"
        return render_rational(self.fraction)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<ExtValue {self.render()}>"


PLUS_INFINITY = ExtValue(ValueKind.PLUS_INFINITY)
MINUS_INFINITY = ExtValue(ValueKind.MINUS_INFINITY)
