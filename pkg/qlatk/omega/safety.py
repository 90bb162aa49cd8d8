from qlatk.core.buchi import BuchiAutomaton, complete_buchi
from qlatk.modules import logger

from .emptiness import accepting_components
from .product import cobuchi_to_buchi


def live_states(automaton: BuchiAutomaton) -> frozenset:
    """ Reachable states with an accepting continuation """
    graph, components = accepting_components(cobuchi_to_buchi(automaton))
    return frozenset(
        graph.coreachable(state for component in components for state in component.nodes)
    )


def safety_closure(automaton: BuchiAutomaton) -> BuchiAutomaton:
    """ Smallest safety language containing L(automaton): the live part with every state
    accepting, completed by one rejecting sink """
    automaton = cobuchi_to_buchi(automaton)
    live = live_states(automaton)
    states = tuple(state for state in automaton.states if state in live)
    trimmed = BuchiAutomaton(
        automaton.alphabet,
        states,
        tuple(state for state in automaton.initial if state in live),
        {
            (state, letter): tuple(t for t in automaton.successors(state, letter) if t in live)
            for state in states
            for letter in automaton.alphabet
            if any(t in live for t in automaton.successors(state, letter))
        },
        frozenset(states),
    )
    logger.debug(f"Safety closure keeps {len(states)} of {len(automaton.states)} states")
    return complete_buchi(trimmed)
