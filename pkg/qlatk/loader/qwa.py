import typing

from qlatk.core.value import parse_rational, render_rational
from qlatk.core.wlts import Wlts, WltsBuilder
from qlatk.exception_factory import QLATKError

from .base import FormatLoader, expect, state_names

qwa = FormatLoader("qwa", lambda: WltsBuilder([]), WltsBuilder.build)


@qwa("alphabet")
def alphabet(builder: WltsBuilder, args: typing.List[str]):
    builder.alphabet.extend(letter for letter in args if letter not in builder.alphabet)


@qwa("state")
def state(builder: WltsBuilder, args: typing.List[str]):
    builder.state(*args)


@qwa("initial")
def initial(builder: WltsBuilder, args: typing.List[str]):
    expect(args, 1, 2)
    builder.initial_state(args[0], parse_rational(args[1]) if len(args) == 2 else None)


@qwa("trans")
def trans(builder: WltsBuilder, args: typing.List[str]):
    """ trans SRC LETTER WEIGHT [PROB] DST """
    expect(args, 4, 5)
    source, letter, weight = args[0], args[1], parse_rational(args[2])
    prob = parse_rational(args[3]) if len(args) == 5 else None
    if builder.alphabet and letter not in builder.alphabet:
        raise QLATKError(f"letter {letter!r} is not in the alphabet")
    builder.add(source, letter, weight, args[-1], prob)


def dump_qwa(system: Wlts) -> str:
    names = state_names(system.states)
    lines = [
        f"alphabet {' '.join(system.alphabet)}",
        f"state {' '.join(names[state] for state in system.states)}",
    ]
    lines.extend(
        f"initial {names[state]} {render_rational(prob)}"
        for state, prob in system.initial.items()
        if prob > 0
    )
    lines.extend(
        f"trans {names[state]} {letter} {render_rational(t.weight)} "
        f"{render_rational(t.prob)} {names[t.target]}"
        for state, letter, t in system.edges()
    )
    return "\n".join(lines) + "\n"
