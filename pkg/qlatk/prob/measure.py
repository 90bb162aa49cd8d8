import typing
from collections import deque
from fractions import Fraction

from qlatk.core.buchi import BuchiAutomaton
from qlatk.core.config import get_settings
from qlatk.core.markov import MarkovBuilder, MarkovChain
from qlatk.exception_factory import AlphabetMismatchError
from qlatk.graph.markov_analysis import BottomComponent, bsccs
from qlatk.modules import logger
from qlatk.omega.supergraph import Matrix, Supergraph

State = typing.Hashable


def check_chain_letters(chain: MarkovChain, alphabet: typing.Iterable[str]) -> None:
    unknown = [letter for letter in chain.alphabet if letter not in set(alphabet)]
    if unknown:
        raise AlphabetMismatchError(f"chain emits letters {unknown} outside the alphabet")


def summary_chain(chain: MarkovChain, supergraph: Supergraph) -> MarkovChain:
    """ Chain over (chain state, summary of the word read so far) """
    settings = get_settings()
    builder = MarkovBuilder()
    start = supergraph.identity
    queue: typing.Deque[typing.Tuple[State, Matrix]] = deque()
    for state in chain.initial_states:
        builder.initial_state((state, start), chain.initial[state])
        queue.append((state, start))
    seen = set(queue)
    while queue:
        node = queue.popleft()
        state, summary = node
        for edge in chain.edges(state):
            target = (edge.target, supergraph.step(summary, edge.letter))
            builder.add(node, edge.letter, edge.prob, target)
            if target not in seen:
                seen.add(target)
                queue.append(target)
                settings.check_size(len(seen), "summary chain")
    return builder.build()


def cycle_summaries(
    product: MarkovChain, supergraph: Supergraph, bottom: BottomComponent, anchor: State
) -> typing.Set[Matrix]:
    """ Summaries of the cycles through the anchor inside a bottom component """
    settings = get_settings()
    start = (anchor, supergraph.identity)
    seen = {start}
    queue = deque([start])
    cycles: typing.Set[Matrix] = set()
    while queue:
        node, summary = queue.popleft()
        for edge in product.edges(node):
            successor = (edge.target, supergraph.step(summary, edge.letter))
            if edge.target == anchor:
                cycles.add(successor[1])
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
                settings.check_size(len(seen), "cycle summaries")
    return cycles


def bottom_accepts(
    product: MarkovChain, supergraph: Supergraph, bottom: BottomComponent
) -> bool:
    """ Almost every word generated inside the component realizes every cycle summary
    infinitely often, so its verdict is the verdict of an idempotent of their product """
    anchor = next(state for state in product.states if state in bottom)
    cycles = cycle_summaries(product, supergraph, bottom, anchor)
    combined = supergraph.identity
    for cycle in sorted(cycles):
        combined = supergraph.product(combined, cycle)
    return supergraph.accepts_after(anchor[1], combined)


def measure_buchi(automaton: BuchiAutomaton, chain: MarkovChain) -> Fraction:
    """ Probability that the chain generates a word of the automaton language """
    check_chain_letters(chain, automaton.alphabet)
    supergraph = Supergraph(automaton)
    product = summary_chain(chain, supergraph)
    measure = Fraction(0)
    for bottom in bsccs(product):
        if bottom.probability and bottom_accepts(product, supergraph, bottom):
            measure += bottom.probability
    logger.debug(f"Measure of {automaton!r} under {chain!r} is {measure}")
    return measure
