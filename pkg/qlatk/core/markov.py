import typing
from dataclasses import dataclass
from fractions import Fraction

from qlatk.exception_factory import InvalidSystemError

from .lasso import LassoWord

State = typing.Hashable
Letter = str


@dataclass(frozen=True)
class MarkovEdge:
    letter: Letter
    prob: Fraction
    target: State


@dataclass(frozen=True)
class MarkovChain:
    """ Finite-state generator of infinite words: every step emits the letter of the taken edge
    Documentation: docs/core/markov.md
    """

    states: typing.Tuple[State, ...]
    initial: typing.Dict[State, Fraction]
    transitions: typing.Dict[State, typing.Tuple[MarkovEdge, ...]]

    def __post_init__(self):
        problems = []
        known = set(self.states)
        if sum(self.initial.values(), Fraction(0)) != 1:
            problems.append("initial distribution does not sum to 1")
        for state in self.states:
            edges = self.edges(state)
            if any(edge.prob <= 0 for edge in edges):
                problems.append(f"nonpositive probability at {state!r}")
            if sum((edge.prob for edge in edges), Fraction(0)) != 1:
                problems.append(f"outgoing probabilities of {state!r} do not sum to 1")
            problems.extend(
                f"unknown target {edge.target!r}" for edge in edges if edge.target not in known
            )
        problems.extend(f"unknown initial {s!r}" for s in self.initial if s not in known)
        if problems:
            raise InvalidSystemError("; ".join(problems), problems)

    def edges(self, state: State) -> typing.Tuple[MarkovEdge, ...]:
        return self.transitions.get(state, ())

    @property
    def alphabet(self) -> typing.Tuple[Letter, ...]:
        """ Letters in order of first appearance """
        letters: typing.Dict[Letter, None] = {}
        for state in self.states:
            letters.update((edge.letter, None) for edge in self.edges(state))
        return tuple(letters)

    @property
    def initial_states(self) -> typing.Tuple[State, ...]:
        return tuple(state for state in self.states if self.initial.get(state, 0) > 0)

    @classmethod
    def from_lasso(cls, word: LassoWord) -> "MarkovChain":
        """ Dirac chain generating exactly the given word """
        return cls(
            tuple(range(word.size)),
            {0: Fraction(1)},
            {
                position: (
                    MarkovEdge(
                        word.letter_at(position), Fraction(1), word.next_position(position)
                    ),
                )
                for position in range(word.size)
            },
        )

    @classmethod
    def uniform(cls, alphabet: typing.Iterable[Letter]) -> "MarkovChain":
        """ Single state emitting every letter with equal probability """
        alphabet = tuple(alphabet)
        share = Fraction(1, len(alphabet))
        return cls((0,), {0: Fraction(1)}, {0: tuple(MarkovEdge(a, share, 0) for a in alphabet)})

    def __repr__(self) -> str:
        return f"<MarkovChain states={len(self.states)} alphabet={list(self.alphabet)}>"


class MarkovBuilder:
    def __init__(self):
        self.states: typing.List[State] = []
        self.initial: typing.Dict[State, Fraction] = {}
        self.transitions: typing.Dict[State, typing.List[MarkovEdge]] = {}

    def state(self, *states: State) -> "MarkovBuilder":
        for state in states:
            if state not in self.states:
                self.states.append(state)
        return self

    def initial_state(
        self, state: State, prob: typing.Union[int, Fraction] = 1
    ) -> "MarkovBuilder":
        self.state(state)
        self.initial[state] = Fraction(prob)
        return self

    def add(
        self, source: State, letter: Letter, prob: typing.Union[int, Fraction], target: State
    ) -> "MarkovBuilder":
        self.state(source, target)
        self.transitions.setdefault(source, []).append(MarkovEdge(letter, Fraction(prob), target))
        return self

    def build(self) -> MarkovChain:
        if not self.initial and self.states:
            self.initial_state(self.states[0])
        return MarkovChain(
            tuple(self.states),
            dict(self.initial),
            {state: tuple(edges) for state, edges in self.transitions.items()},
        )
