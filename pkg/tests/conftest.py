import random
import typing
from fractions import Fraction
from pathlib import Path

import pytest

from qlatk.core import (
    AcceptanceMode,
    BuchiAutomaton,
    BuchiBuilder,
    LassoWord,
    MarkovBuilder,
    MarkovChain,
    QwaSpec,
    RunAggregator,
    Settings,
    WordAggregator,
    Wlts,
    WltsBuilder,
    configure,
)
from qlatk.loader import load

SAMPLES = Path(__file__).parent.parent / "samples"

AB = ("a", "b")


@pytest.fixture(autouse=True)
def default_settings():
    configure(Settings())
    yield
    configure(Settings())


@pytest.fixture
def sample() -> typing.Callable[[str], typing.Any]:
    return lambda name: load(SAMPLES / name)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20241018)


def single_state(a: int = 1, b: int = 0) -> Wlts:
    return WltsBuilder(AB).add("q", "a", a, "q").add("q", "b", b, "q").build()


def qwa(
    system: Wlts, g: str = "sup", f: str = "sup", discount: typing.Optional[Fraction] = None
) -> QwaSpec:
    return QwaSpec(RunAggregator(f), WordAggregator(g), system, discount)


def random_system(
    rng: random.Random,
    states: int,
    alphabet: typing.Sequence[str] = AB,
    weights: typing.Sequence[int] = (0, 1),
    branching: int = 2,
) -> Wlts:
    builder = WltsBuilder(alphabet)
    builder.initial_state(0)
    for state in range(states):
        builder.state(state)
    for state in range(states):
        for letter in alphabet:
            targets = rng.sample(range(states), rng.randint(1, min(branching, states)))
            for target in targets:
                builder.add(state, letter, rng.choice(weights), target)
    return builder.build()


def random_automaton(
    rng: random.Random, states: int, alphabet: typing.Sequence[str] = AB
) -> BuchiAutomaton:
    builder = BuchiBuilder(alphabet)
    builder.initial_state(0)
    builder.state(*range(states))
    builder.accept(*(state for state in range(states) if rng.random() < 0.4))
    for state in range(states):
        for letter in alphabet:
            for target in range(states):
                if rng.random() < 0.45:
                    builder.add(state, letter, target)
    return builder.build()


def random_lasso(rng: random.Random, size: int, alphabet: typing.Sequence[str] = AB) -> LassoWord:
    prefix = rng.randint(0, size - 1)
    return LassoWord(
        tuple(rng.choice(alphabet) for _ in range(prefix)),
        tuple(rng.choice(alphabet) for _ in range(size - prefix)),
    )


def random_chain(
    rng: random.Random, states: int, alphabet: typing.Sequence[str] = AB
) -> MarkovChain:
    builder = MarkovBuilder()
    builder.initial_state(0)
    for state in range(states):
        letters = rng.sample(list(alphabet), rng.randint(1, len(alphabet)))
        share = Fraction(1, len(letters))
        for letter in letters:
            builder.add(state, letter, share, rng.randrange(states))
    return builder.build()


def leaking_system() -> Wlts:
    """ Staying on p pays 1, leaving for q after any number of steps pays 0 """
    return (
        WltsBuilder(["a"]).add("p", "a", 1, "p").add("p", "a", 0, "q").add("q", "a", 0, "q")
    ).build()


def finitely_many_b() -> BuchiAutomaton:
    return (
        BuchiBuilder(AB, AcceptanceMode.CO_BUCHI)
        .initial_state("s")
        .accept("t")
        .add("s", "a", "s")
        .add("s", "b", "t")
        .add("t", "a", "s")
        .add("t", "b", "t")
        .build()
    )
