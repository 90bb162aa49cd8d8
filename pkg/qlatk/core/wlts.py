import typing
from dataclasses import dataclass, field
from fractions import Fraction

from qlatk.exception_factory import InvalidSystemError

State = typing.Hashable
Letter = str


@dataclass(frozen=True)
class Transition:
    weight: Fraction
    prob: Fraction
    target: State


@dataclass(frozen=True)
class Wlts:
    """ Complete weighted labeled (probabilistic) transition system.
    States and letters keep declaration order, which is the tie-break order of every
    downstream construction
    Documentation: docs/core/wlts.md
    """

    alphabet: typing.Tuple[Letter, ...]
    states: typing.Tuple[State, ...]
    initial: typing.Dict[State, Fraction]
    transitions: typing.Dict[typing.Tuple[State, Letter], typing.Tuple[Transition, ...]]
    _index: typing.Dict[State, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update((state, i) for i, state in enumerate(self.states))

    def index(self, state: State) -> int:
        return self._index[state]

    def successors(self, state: State, letter: Letter) -> typing.Tuple[Transition, ...]:
        return self.transitions.get((state, letter), ())

    @property
    def initial_states(self) -> typing.Tuple[State, ...]:
        return tuple(state for state in self.states if self.initial.get(state, 0) > 0)

    def edges(self) -> typing.Iterator[typing.Tuple[State, Letter, Transition]]:
        for state in self.states:
            for letter in self.alphabet:
                for transition in self.successors(state, letter):
                    yield state, letter, transition

    def weights(self) -> typing.List[Fraction]:
        """ Sorted set of transition weights """
        return sorted({transition.weight for _, _, transition in self.edges()})

    def is_deterministic(self) -> bool:
        return len(self.initial_states) == 1 and all(
            len(self.successors(state, letter)) == 1
            for state in self.states
            for letter in self.alphabet
        )

    def map_weights(self, function: typing.Callable[[Fraction], Fraction]) -> "Wlts":
        return Wlts(
            self.alphabet,
            self.states,
            dict(self.initial),
            {
                key: tuple(
                    Transition(function(t.weight), t.prob, t.target) for t in transitions
                )
                for key, transitions in self.transitions.items()
            },
        )

    def __repr__(self) -> str:
        return f"<Wlts states={len(self.states)} alphabet={list(self.alphabet)}>"


def dual(system: Wlts) -> Wlts:
    """ Same system with every weight negated """
    return system.map_weights(lambda weight: -weight)


def separate_parallel_transitions(system: Wlts) -> Wlts:
    """ Equivalent system whose states are (state, incoming weight) pairs, so that distinct
    transitions of a (state, letter) pair lead to distinct states. Runs of both systems are
    in bijection and carry the same weights """
    incoming: typing.Dict[State, typing.List[Fraction]] = {state: [] for state in system.states}
    for _, _, transition in system.edges():
        if transition.weight not in incoming[transition.target]:
            incoming[transition.target].append(transition.weight)

    states: typing.List[State] = []
    initial: typing.Dict[State, Fraction] = {}
    for state in system.states:
        if system.initial.get(state, 0) > 0:
            states.append((state, None))
            initial[(state, None)] = system.initial[state]
        states.extend((state, weight) for weight in sorted(incoming[state]))

    transitions: typing.Dict[typing.Tuple[State, Letter], typing.Tuple[Transition, ...]] = {}
    for pair in states:
        state = pair[0]
        for letter in system.alphabet:
            merged: typing.Dict[State, Transition] = {}
            for transition in system.successors(state, letter):
                target = (transition.target, transition.weight)
                if target in merged:
                    previous = merged[target]
                    merged[target] = Transition(
                        transition.weight, previous.prob + transition.prob, target
                    )
                else:
                    merged[target] = Transition(transition.weight, transition.prob, target)
            transitions[(pair, letter)] = tuple(merged.values())
    return Wlts(system.alphabet, tuple(states), initial, transitions)


class WltsBuilder:
    """ Collects declarations and produces a validated Wlts.
    >>> WltsBuilder(["on", "off"]).add("q", "on", 1, "q").add("q", "off", 0, "q").build()
    """

    def __init__(self, alphabet: typing.Iterable[Letter]):
        self.alphabet: typing.List[Letter] = list(alphabet)
        self.states: typing.List[State] = []
        self.initial: typing.Dict[State, typing.Optional[Fraction]] = {}
        self.transitions: typing.Dict[
            typing.Tuple[State, Letter],
            typing.List[typing.Tuple[Fraction, typing.Optional[Fraction], State]],
        ] = {}

    def state(self, *states: State) -> "WltsBuilder":
        for state in states:
            if state not in self.states:
                self.states.append(state)
        return self

    def initial_state(
        self, state: State, prob: typing.Optional[typing.Union[int, Fraction]] = None
    ) -> "WltsBuilder":
        self.state(state)
        self.initial[state] = None if prob is None else Fraction(prob)
        return self

    def add(
        self,
        source: State,
        letter: Letter,
        weight: typing.Union[int, Fraction],
        target: State,
        prob: typing.Optional[typing.Union[int, Fraction]] = None,
    ) -> "WltsBuilder":
        self.state(source, target)
        if letter not in self.alphabet:
            self.alphabet.append(letter)
        self.transitions.setdefault((source, letter), []).append(
            (Fraction(weight), None if prob is None else Fraction(prob), target)
        )
        return self

    def build(self, validate: bool = True) -> Wlts:
        if not self.initial and self.states:
            self.initial_state(self.states[0])
        system = Wlts(
            tuple(self.alphabet),
            tuple(self.states),
            _fill_uniform(self.initial),
            {
                key: _merge_duplicates(
                    Transition(weight, prob, target)
                    for (weight, _, target), prob in zip(
                        declared, _fill_uniform_list([p for _, p, _ in declared])
                    )
                )
                for key, declared in self.transitions.items()
            },
        )
        if validate:
            from .wlts_validator import validate as validate_system

            violations = validate_system(system)
            if violations:
                raise InvalidSystemError(
                    "; ".join(str(violation) for violation in violations), violations
                )
        return system


def _fill_uniform(
    probabilities: typing.Dict[State, typing.Optional[Fraction]]
) -> typing.Dict[State, Fraction]:
    filled = _fill_uniform_list(list(probabilities.values()))
    return dict(zip(probabilities.keys(), filled))


def _fill_uniform_list(probs: typing.List[typing.Optional[Fraction]]) -> typing.List[Fraction]:
    """ Missing probabilities share the remaining mass uniformly """
    missing = [p for p in probs if p is None]
    if not missing:
        return typing.cast(typing.List[Fraction], probs)
    remaining = 1 - sum((p for p in probs if p is not None), Fraction(0))
    share = remaining / len(missing)
    return [share if p is None else p for p in probs]


def _merge_duplicates(transitions: typing.Iterable[Transition]) -> typing.Tuple[Transition, ...]:
    """ A transition is identified by its (weight, target) pair """
    merged: typing.Dict[typing.Tuple[Fraction, State], Fraction] = {}
    for transition in transitions:
        key = (transition.weight, transition.target)
        merged[key] = merged.get(key, Fraction(0)) + transition.prob
    return tuple(Transition(weight, prob, target) for (weight, target), prob in merged.items())
