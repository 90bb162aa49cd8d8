import typing
from collections import deque

from qlatk.core.buchi import BuchiAutomaton
from qlatk.graph import sccs
from qlatk.modules import logger

from .emptiness import automaton_graph
from .product import cobuchi_to_buchi

State = typing.Hashable


def has_infinitely_ambiguous_word(automaton: BuchiAutomaton) -> bool:
    """ Whether some word has infinitely many accepting runs.

    Searched as states p, q and a nonempty word v with a loop p -v-> p, a different path
    p -v-> q and a loop q -v-> q entering an accepting state. The runs on u v^omega that
    leave p after k rounds are then pairwise different and accepting
    """
    automaton = cobuchi_to_buchi(automaton)
    graph = automaton_graph(automaton)
    graph = graph.subgraph(graph.reachable(automaton.initial))
    cyclic = [c.nodes for c in sccs(graph) if not c.trivial]
    on_cycle = {state: nodes for nodes in cyclic for state in nodes}
    accepting_cycles = [nodes for nodes in cyclic if any(map(automaton.is_accepting, nodes))]

    for p in graph.nodes:
        if p not in on_cycle:
            continue
        for nodes in accepting_cycles:
            for q in graph.nodes:
                if q in nodes and _pattern(automaton, p, q, on_cycle[p], nodes):
                    logger.debug(f"Runs branching from {p!r} to {q!r} are unbounded")
                    return True
    return False


def _pattern(
    automaton: BuchiAutomaton,
    p: State,
    q: State,
    p_cycle: typing.FrozenSet[State],
    q_cycle: typing.FrozenSet[State],
) -> bool:
    start = (p, p, q, False, False)
    seen = {start}
    queue = deque([start])
    while queue:
        first, second, third, split, accepted = queue.popleft()
        for letter in automaton.alphabet:
            for first_next in automaton.successors(first, letter):
                if first_next not in p_cycle:
                    continue
                for second_next in automaton.successors(second, letter):
                    for third_next in automaton.successors(third, letter):
                        if third_next not in q_cycle:
                            continue
                        state = (
                            first_next,
                            second_next,
                            third_next,
                            split or first_next != second_next,
                            accepted or automaton.is_accepting(third_next),
                        )
                        if state[:3] == (p, q, q) and state[3] and state[4]:
                            return True
                        if state not in seen:
                            seen.add(state)
                            queue.append(state)
    return False
