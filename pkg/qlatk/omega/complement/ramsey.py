from qlatk.core.buchi import BuchiAutomaton
from qlatk.modules import logger

from ..supergraph import Supergraph, pair_language_automaton
from .abc import ABCComplement


class RamseyComplement(ABCComplement):
    """ Union of the pair languages s e^omega rejected by the automaton """

    def complement(self, automaton: BuchiAutomaton) -> BuchiAutomaton:
        supergraph = Supergraph(automaton)
        rejected = [
            pair for pair in supergraph.proper_pairs() if not supergraph.pair_accepts(*pair)
        ]
        logger.debug(
            f"Complementing {automaton!r} with {len(rejected)} rejected pairs "
            f"of {len(supergraph)} supergraphs"
        )
        return pair_language_automaton(supergraph, rejected)
