import typing
from collections import deque

from qlatk.core.buchi import AcceptanceMode, BuchiAutomaton
from qlatk.core.config import get_settings
from qlatk.core.lasso import LassoWord
from qlatk.exception_factory import AlphabetMismatchError
from qlatk.modules import logger

State = typing.Hashable


def check_alphabets(*alphabets: typing.Iterable[str]) -> typing.Tuple[str, ...]:
    """ Returns the first alphabet when all of them hold the same letters """
    first = tuple(alphabets[0])
    for alphabet in alphabets[1:]:
        if set(alphabet) != set(first):
            raise AlphabetMismatchError(
                f"alphabets {sorted(first)} and {sorted(alphabet)} differ"
            )
    return first


def cobuchi_to_buchi(automaton: BuchiAutomaton) -> BuchiAutomaton:
    """ A co-Buchi run avoids accepting states from some point on: the first copy reads
    freely, the second copy forbids accepting states and is entirely accepting """
    if automaton.mode is AcceptanceMode.BUCHI:
        return automaton
    forbidden = automaton.accepting
    states: typing.List[State] = [(state, 0) for state in automaton.states]
    states.extend((state, 1) for state in automaton.states if state not in forbidden)
    transitions: typing.Dict[typing.Tuple[State, str], typing.Tuple[State, ...]] = {}
    for state in automaton.states:
        for letter in automaton.alphabet:
            targets = automaton.successors(state, letter)
            free = [(target, 0) for target in targets]
            free.extend((target, 1) for target in targets if target not in forbidden)
            transitions[((state, 0), letter)] = tuple(free)
            if state not in forbidden:
                transitions[((state, 1), letter)] = tuple(
                    (target, 1) for target in targets if target not in forbidden
                )
    return BuchiAutomaton(
        automaton.alphabet,
        tuple(states),
        tuple((state, 0) for state in automaton.initial),
        transitions,
        frozenset(state for state in states if state[1] == 1),
    )


def explore(
    alphabet: typing.Sequence[str],
    initial: typing.Iterable[State],
    successors: typing.Callable[[State, str], typing.Iterable[State]],
    is_accepting: typing.Callable[[State], bool],
    what: str = "automaton",
) -> BuchiAutomaton:
    """ Builds the reachable part of an implicitly given automaton breadth first """
    settings = get_settings()
    initial = list(dict.fromkeys(initial))
    states: typing.Dict[State, None] = dict.fromkeys(initial)
    transitions: typing.Dict[typing.Tuple[State, str], typing.Tuple[State, ...]] = {}
    queue = deque(initial)
    while queue:
        state = queue.popleft()
        for letter in alphabet:
            targets = tuple(dict.fromkeys(successors(state, letter)))
            if targets:
                transitions[(state, letter)] = targets
            for target in targets:
                if target not in states:
                    states[target] = None
                    queue.append(target)
                    settings.check_size(len(states), what)
    logger.debug(f"Explored {what} with {len(states)} states")
    return BuchiAutomaton(
        tuple(alphabet),
        tuple(states),
        tuple(initial),
        transitions,
        frozenset(state for state in states if is_accepting(state)),
    )


def intersect(a: BuchiAutomaton, b: BuchiAutomaton) -> BuchiAutomaton:
    """ Product with a flag waiting alternately for accepting states of a and of b """
    alphabet = check_alphabets(a.alphabet, b.alphabet)
    a, b = cobuchi_to_buchi(a), cobuchi_to_buchi(b)

    def successors(state, letter):
        p, q, flag = state
        if flag == 0 and p in a.accepting:
            flag = 1
        elif flag == 1 and q in b.accepting:
            flag = 0
        for p_next in a.successors(p, letter):
            for q_next in b.successors(q, letter):
                yield p_next, q_next, flag

    return explore(
        alphabet,
        ((p, q, 0) for p in a.initial for q in b.initial),
        successors,
        lambda state: state[2] == 1 and state[1] in b.accepting,
        "intersection",
    )


def union(a: BuchiAutomaton, b: BuchiAutomaton) -> BuchiAutomaton:
    alphabet = check_alphabets(a.alphabet, b.alphabet)
    a, b = cobuchi_to_buchi(a), cobuchi_to_buchi(b)
    parts = (a, b)
    return BuchiAutomaton(
        alphabet,
        tuple((i, state) for i, part in enumerate(parts) for state in part.states),
        tuple((i, state) for i, part in enumerate(parts) for state in part.initial),
        {
            ((i, state), letter): tuple((i, target) for target in targets)
            for i, part in enumerate(parts)
            for (state, letter), targets in part.transitions.items()
        },
        frozenset((i, state) for i, part in enumerate(parts) for state in part.accepting),
    )


def lasso_automaton(
    word: LassoWord, alphabet: typing.Optional[typing.Iterable[str]] = None
) -> BuchiAutomaton:
    """ Automaton accepting exactly the given lasso word """
    alphabet = tuple(alphabet) if alphabet is not None else tuple(sorted(word.letters()))
    word.check_alphabet(alphabet)
    return BuchiAutomaton(
        alphabet,
        tuple(range(word.size)),
        (0,),
        {(i, word.letter_at(i)): (word.next_position(i),) for i in range(word.size)},
        frozenset(range(word.size)),
    )


def accepts(automaton: BuchiAutomaton, word: LassoWord) -> bool:
    """ Lasso membership: some reachable accepting state of the product with the word
    lies on a cycle """
    from .emptiness import is_empty

    word.check_alphabet(automaton.alphabet)
    return not is_empty(intersect(automaton, lasso_automaton(word, automaton.alphabet)))
