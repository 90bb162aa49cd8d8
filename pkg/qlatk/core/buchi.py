import typing
from dataclasses import dataclass, field
from enum import Enum

from qlatk.exception_factory import InvalidSystemError

State = typing.Hashable
Letter = str

SINK = ("sink",)


class AcceptanceMode(Enum):
    """ Buchi: some accepting state is visited infinitely often.
    CoBuchi: accepting states are visited only finitely often """

    BUCHI = "buchi"
    CO_BUCHI = "cobuchi"


@dataclass(frozen=True)
class BuchiAutomaton:
    """ Nondeterministic omega-automaton, possibly incomplete
    Documentation: docs/core/buchi.md
    """

    alphabet: typing.Tuple[Letter, ...]
    states: typing.Tuple[State, ...]
    initial: typing.Tuple[State, ...]
    transitions: typing.Dict[typing.Tuple[State, Letter], typing.Tuple[State, ...]]
    accepting: typing.FrozenSet[State]
    mode: AcceptanceMode = AcceptanceMode.BUCHI
    _index: typing.Dict[State, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update((state, i) for i, state in enumerate(self.states))
        unknown = [
            target
            for targets in self.transitions.values()
            for target in targets
            if target not in self._index
        ]
        unknown.extend(state for state in self.initial if state not in self._index)
        unknown.extend(state for state in self.accepting if state not in self._index)
        if unknown:
            raise InvalidSystemError(f"states {unknown[:5]} are not declared")

    def index(self, state: State) -> int:
        return self._index[state]

    def successors(self, state: State, letter: Letter) -> typing.Tuple[State, ...]:
        return self.transitions.get((state, letter), ())

    def is_accepting(self, state: State) -> bool:
        return state in self.accepting

    def is_complete(self) -> bool:
        return bool(self.initial) and all(
            self.successors(state, letter) for state in self.states for letter in self.alphabet
        )

    def edges(self) -> typing.Iterator[typing.Tuple[State, Letter, State]]:
        for state in self.states:
            for letter in self.alphabet:
                for target in self.successors(state, letter):
                    yield state, letter, target

    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(
            len(targets) <= 1 for targets in self.transitions.values()
        )

    def __repr__(self) -> str:
        return (
            f"<BuchiAutomaton mode={self.mode.value} states={len(self.states)} "
            f"accepting={len(self.accepting)} alphabet={list(self.alphabet)}>"
        )


class BuchiBuilder:
    """ Collects declarations of an automaton, states keep first-mention order
    >>> BuchiBuilder(["a", "b"]).initial_state(0).accept(1).add(0, "b", 1).add(1, "b", 1).build()
    """

    def __init__(
        self, alphabet: typing.Iterable[Letter], mode: AcceptanceMode = AcceptanceMode.BUCHI
    ):
        self.alphabet: typing.List[Letter] = list(alphabet)
        self.mode = mode
        self.states: typing.List[State] = []
        self.initial: typing.List[State] = []
        self.accepting: typing.Set[State] = set()
        self.transitions: typing.Dict[typing.Tuple[State, Letter], typing.List[State]] = {}

    def state(self, *states: State) -> "BuchiBuilder":
        for state in states:
            if state not in self.states:
                self.states.append(state)
        return self

    def initial_state(self, *states: State) -> "BuchiBuilder":
        self.state(*states)
        self.initial.extend(state for state in states if state not in self.initial)
        return self

    def accept(self, *states: State) -> "BuchiBuilder":
        self.state(*states)
        self.accepting.update(states)
        return self

    def add(self, source: State, letter: Letter, target: State) -> "BuchiBuilder":
        self.state(source, target)
        if letter not in self.alphabet:
            self.alphabet.append(letter)
        targets = self.transitions.setdefault((source, letter), [])
        if target not in targets:
            targets.append(target)
        return self

    def build(self) -> BuchiAutomaton:
        return BuchiAutomaton(
            tuple(self.alphabet),
            tuple(self.states),
            tuple(self.initial),
            {key: tuple(targets) for key, targets in self.transitions.items()},
            frozenset(self.accepting),
            self.mode,
        )


def complete_buchi(automaton: BuchiAutomaton) -> BuchiAutomaton:
    """ Adds a sink for every missing transition. The sink rejects in both modes: it is
    non-accepting for Buchi and accepting (visited forever) for CoBuchi """
    if automaton.is_complete():
        return automaton
    sink = SINK
    while sink in automaton.states:
        sink = sink + ("'",)
    transitions = {
        (state, letter): automaton.successors(state, letter) or (sink,)
        for state in automaton.states
        for letter in automaton.alphabet
    }
    transitions.update({(sink, letter): (sink,) for letter in automaton.alphabet})
    accepting = automaton.accepting
    if automaton.mode is AcceptanceMode.CO_BUCHI:
        accepting = accepting | {sink}
    return BuchiAutomaton(
        automaton.alphabet,
        automaton.states + (sink,),
        automaton.initial or (sink,),
        transitions,
        accepting,
        automaton.mode,
    )


def universal_automaton(alphabet: typing.Iterable[Letter]) -> BuchiAutomaton:
    """ One accepting state looping on every letter """
    alphabet = tuple(alphabet)
    return BuchiAutomaton(
        alphabet, (0,), (0,), {(0, letter): (0,) for letter in alphabet}, frozenset({0})
    )


def empty_automaton(alphabet: typing.Iterable[Letter]) -> BuchiAutomaton:
    return BuchiAutomaton(tuple(alphabet), (0,), (0,), {}, frozenset())


def rename_states(automaton: BuchiAutomaton) -> BuchiAutomaton:
    """ Same automaton over states 0..n-1, in declaration order """
    index = {state: i for i, state in enumerate(automaton.states)}
    return BuchiAutomaton(
        automaton.alphabet,
        tuple(range(len(automaton.states))),
        tuple(index[state] for state in automaton.initial),
        {
            (index[state], letter): tuple(index[target] for target in targets)
            for (state, letter), targets in automaton.transitions.items()
        },
        frozenset(index[state] for state in automaton.accepting),
        automaton.mode,
    )
