from abc import ABC, abstractmethod

from qlatk.core.buchi import BuchiAutomaton


class ABCComplement(ABC):
    """ Complementation construction for Buchi automata """

    @abstractmethod
    def complement(self, automaton: BuchiAutomaton) -> BuchiAutomaton:
        pass

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}>"
