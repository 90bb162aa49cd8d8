import typing

from qlatk.core.buchi import AcceptanceMode, BuchiAutomaton, BuchiBuilder
from qlatk.exception_factory import QLATKError

from .base import FormatLoader, expect, state_names

ba = FormatLoader("ba", lambda: BuchiBuilder([]), BuchiBuilder.build)


@ba("alphabet")
def alphabet(builder: BuchiBuilder, args: typing.List[str]):
    builder.alphabet.extend(letter for letter in args if letter not in builder.alphabet)


@ba("state")
def state(builder: BuchiBuilder, args: typing.List[str]):
    builder.state(*args)


@ba("initial")
def initial(builder: BuchiBuilder, args: typing.List[str]):
    builder.initial_state(*args)


@ba("accepting")
def accepting(builder: BuchiBuilder, args: typing.List[str]):
    builder.accept(*args)


@ba("mode")
def mode(builder: BuchiBuilder, args: typing.List[str]):
    expect(args, 1)
    try:
        builder.mode = AcceptanceMode(args[0])
    except ValueError:
        raise QLATKError(f"mode must be buchi or cobuchi, not {args[0]!r}")


@ba("trans")
def trans(builder: BuchiBuilder, args: typing.List[str]):
    expect(args, 3)
    if builder.alphabet and args[1] not in builder.alphabet:
        raise QLATKError(f"letter {args[1]!r} is not in the alphabet")
    builder.add(*args)


def dump_buchi(automaton: BuchiAutomaton) -> str:
    names = state_names(automaton.states)
    lines = [
        f"alphabet {' '.join(automaton.alphabet)}",
        f"state {' '.join(names[state] for state in automaton.states)}",
        f"mode {automaton.mode.value}",
    ]
    if automaton.initial:
        lines.append(f"initial {' '.join(names[state] for state in automaton.initial)}")
    accepting = [names[state] for state in automaton.states if state in automaton.accepting]
    if accepting:
        lines.append(f"accepting {' '.join(accepting)}")
    lines.extend(
        f"trans {names[state]} {letter} {names[target]}"
        for state, letter, target in automaton.edges()
    )
    return "\n".join(lines) + "\n"
