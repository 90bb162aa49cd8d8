import typing

from qlatk.core.markov import MarkovBuilder, MarkovChain
from qlatk.core.value import parse_rational, render_rational

from .base import FormatLoader, expect, state_names

mc = FormatLoader("mc", MarkovBuilder, MarkovBuilder.build)


@mc("state")
def state(builder: MarkovBuilder, args: typing.List[str]):
    builder.state(*args)


@mc("initial")
def initial(builder: MarkovBuilder, args: typing.List[str]):
    expect(args, 1, 2)
    builder.initial_state(args[0], parse_rational(args[1]) if len(args) == 2 else 1)


@mc("trans")
def trans(builder: MarkovBuilder, args: typing.List[str]):
    """ trans SRC LETTER PROB DST """
    expect(args, 4)
    builder.add(args[0], args[1], parse_rational(args[2]), args[3])


def dump_markov(chain: MarkovChain) -> str:
    names = state_names(chain.states)
    lines = [f"state {' '.join(names[state] for state in chain.states)}"]
    lines.extend(
        f"initial {names[state]} {render_rational(prob)}"
        for state, prob in chain.initial.items()
        if prob > 0
    )
    lines.extend(
        f"trans {names[state]} {edge.letter} {render_rational(edge.prob)} {names[edge.target]}"
        for state in chain.states
        for edge in chain.edges(state)
    )
    return "\n".join(lines) + "\n"
