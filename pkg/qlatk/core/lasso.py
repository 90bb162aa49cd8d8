import typing
from dataclasses import dataclass

from qlatk.exception_factory import ParseError, UnknownLetterError

Letter = str


@dataclass(frozen=True)
class LassoWord:
    """ Ultimately periodic word prefix · period^ω """

    prefix: typing.Tuple[Letter, ...]
    period: typing.Tuple[Letter, ...]

    def __post_init__(self):
        if not self.period:
            raise ParseError(0, "lasso period must be nonempty")

    @classmethod
    def parse(cls, literal: str) -> "LassoWord":
        """ Parses `u ; v` with space separated letters, e.g. `on ; on off` """
        if literal.count(";") != 1:
            raise ParseError(0, f"lasso literal {literal!r} needs exactly one ';'")
        prefix, period = literal.split(";")
        return cls(tuple(prefix.split()), tuple(period.split()))

    @classmethod
    def of(
        cls, prefix: typing.Iterable[Letter], period: typing.Iterable[Letter]
    ) -> "LassoWord":
        return cls(tuple(prefix), tuple(period))

    @property
    def size(self) -> int:
        """ Number of positions of the word automaton of the lasso """
        return len(self.prefix) + len(self.period)

    def letter_at(self, position: int) -> Letter:
        if position < len(self.prefix):
            return self.prefix[position]
        return self.period[(position - len(self.prefix)) % len(self.period)]

    def next_position(self, position: int) -> int:
        """ Successor of a position of the word automaton """
        if position + 1 < self.size:
            return position + 1
        return len(self.prefix)

    def letters(self) -> typing.FrozenSet[Letter]:
        return frozenset(self.prefix) | frozenset(self.period)

    def check_alphabet(self, alphabet: typing.Iterable[Letter]) -> "LassoWord":
        unknown = self.letters() - frozenset(alphabet)
        if unknown:
            raise UnknownLetterError(f"letters {sorted(unknown)} are not in the alphabet")
        return self

    def unroll(self, length: int) -> typing.Tuple[Letter, ...]:
        return tuple(self.letter_at(self._unrolled_position(i)) for i in range(length))

    def _unrolled_position(self, index: int) -> int:
        if index < len(self.prefix):
            return index
        return len(self.prefix) + (index - len(self.prefix)) % len(self.period)

    def canonical(self) -> "LassoWord":
        """ Shortest prefix and primitive period describing the same infinite word """
        period = self.period
        for size in range(1, len(period) + 1):
            if len(period) % size == 0 and period[:size] * (len(period) // size) == period:
                period = period[:size]
                break
        prefix = self.prefix
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = (period[-1],) + period[:-1]
        return LassoWord(prefix, period)

    def same_word(self, other: "LassoWord") -> bool:
        return self.canonical() == other.canonical()

    def __str__(self) -> str:
        return f"{' '.join(self.prefix)} ; {' '.join(self.period)}".strip()
