import typing
from collections import deque

from qlatk.core.buchi import BuchiAutomaton
from qlatk.graph import sccs
from qlatk.modules import logger

from .complement import complement
from .emptiness import automaton_graph
from .product import check_alphabets, cobuchi_to_buchi, intersect
from .safety import live_states

State = typing.Hashable


def is_infinite(automaton: BuchiAutomaton) -> bool:
    """ Whether infinitely many words are accepted.

    Over the live states, this holds iff some state p on a cycle and two runs reading one
    word z from p reach states r and s, with r still on a cycle through p, such that r
    continues inside that cycle on a letter and s continues into the live part on another
    letter. Looping around p and then branching off gives a different word per loop count
    """
    automaton = cobuchi_to_buchi(automaton)
    live = live_states(automaton)
    graph = automaton_graph(automaton).subgraph(live)

    for component in sccs(graph):
        if component.trivial:
            continue
        root = next(state for state in graph.nodes if state in component)
        if _branches(automaton, component.nodes, live, root):
            logger.debug(f"Infinitely many words branch off the cycle through {root!r}")
            return True
    return False


def _branches(
    automaton: BuchiAutomaton,
    component: typing.FrozenSet[State],
    live: typing.FrozenSet[State],
    root: State,
) -> bool:
    def letters(state: State, allowed: typing.FrozenSet[State]) -> typing.Set[str]:
        return {
            letter
            for letter in automaton.alphabet
            if any(target in allowed for target in automaton.successors(state, letter))
        }

    seen = {(root, root)}
    queue = deque(seen)
    while queue:
        inner, outer = queue.popleft()
        staying, leaving = letters(inner, component), letters(outer, live)
        if any(a != b for a in staying for b in leaving):
            return True
        for letter in staying & leaving:
            for inner_next in automaton.successors(inner, letter):
                if inner_next not in component:
                    continue
                for outer_next in automaton.successors(outer, letter):
                    pair = (inner_next, outer_next)
                    if outer_next in live and pair not in seen:
                        seen.add(pair)
                        queue.append(pair)
    return False


def diff_is_infinite(a: BuchiAutomaton, b: BuchiAutomaton) -> bool:
    """ Whether L(a) \\ L(b) is infinite """
    check_alphabets(a.alphabet, b.alphabet)
    return is_infinite(intersect(a, complement(b)))
