import itertools
import typing

from qlatk.core.buchi import BuchiAutomaton

from ..product import cobuchi_to_buchi, explore
from .abc import ABCComplement

State = typing.Hashable
Ranking = typing.Tuple[typing.Tuple[State, int], ...]


class RankComplement(ABCComplement):
    """ Level rankings with a breakpoint set. Rankings range over 0..2n with even ranks on
    accepting states; rankings are not required to be tight """

    def complement(self, automaton: BuchiAutomaton) -> BuchiAutomaton:
        automaton = cobuchi_to_buchi(automaton)
        top = 2 * len(automaton.states)
        order = {state: i for i, state in enumerate(automaton.states)}

        def successors(state, letter):
            ranking, owing = dict(state[0]), state[1]
            bound: typing.Dict[State, int] = {}
            for source, rank in ranking.items():
                for target in automaton.successors(source, letter):
                    bound[target] = min(bound.get(target, top), rank)
            targets = sorted(bound, key=order.__getitem__)
            choices = [
                [
                    rank
                    for rank in range(bound[target] + 1)
                    if rank % 2 == 0 or not automaton.is_accepting(target)
                ]
                for target in targets
            ]
            moved = {
                target
                for source in owing
                for target in automaton.successors(source, letter)
            }
            for ranks in itertools.product(*choices):
                even = {target for target, rank in zip(targets, ranks) if rank % 2 == 0}
                yield (
                    tuple(zip(targets, ranks)),
                    frozenset(even & moved if owing else even),
                )

        initial = tuple(
            (state, top) for state in sorted(set(automaton.initial), key=order.__getitem__)
        )
        return explore(
            automaton.alphabet,
            [(initial, frozenset())],
            successors,
            lambda state: not state[1],
            "rank complement",
        )
