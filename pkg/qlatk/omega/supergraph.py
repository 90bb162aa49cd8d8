import typing
from collections import deque

from qlatk.core.buchi import BuchiAutomaton
from qlatk.core.config import get_settings
from qlatk.core.lasso import LassoWord
from qlatk.modules import logger

from .product import cobuchi_to_buchi, explore

Element = typing.TypeVar("Element", bound=typing.Hashable)
Matrix = typing.Tuple[typing.Tuple[int, ...], ...]
Pair = typing.Tuple[typing.Any, typing.Any]

NONE, VISIT, ACCEPTING_VISIT = 0, 1, 2


class TransitionMonoid(typing.Generic[Element]):
    """ Finite monoid generated by the letter elements, explored breadth first.
    `elements` holds the elements of nonempty words with a shortest representative
    """

    def __init__(
        self,
        alphabet: typing.Sequence[str],
        generators: typing.Mapping[str, Element],
        multiply: typing.Callable[[Element, Element], Element],
        identity: Element,
        what: str = "transition monoid",
    ):
        self.alphabet = tuple(alphabet)
        self.generators = dict(generators)
        self.multiply = multiply
        self.identity = identity
        self.representative: typing.Dict[Element, typing.Tuple[str, ...]] = {}
        self._step: typing.Dict[typing.Tuple[Element, str], Element] = {}
        self._products: typing.Dict[typing.Tuple[Element, Element], Element] = {}

        settings = get_settings()
        queue: typing.Deque[Element] = deque()
        for letter in self.alphabet:
            element = self.generators[letter]
            if element not in self.representative:
                self.representative[element] = (letter,)
                queue.append(element)
        while queue:
            element = queue.popleft()
            for letter in self.alphabet:
                successor = self.step(element, letter)
                if successor not in self.representative:
                    self.representative[successor] = self.representative[element] + (letter,)
                    queue.append(successor)
                    settings.check_size(len(self.representative), what)
        logger.debug(f"Built {what} with {len(self.representative)} elements")

    @property
    def elements(self) -> typing.List[Element]:
        return list(self.representative)

    def step(self, element: Element, letter: str) -> Element:
        key = (element, letter)
        if key not in self._step:
            self._step[key] = self.multiply(element, self.generators[letter])
        return self._step[key]

    def product(self, left: Element, right: Element) -> Element:
        key = (left, right)
        if key not in self._products:
            self._products[key] = self.multiply(left, right)
        return self._products[key]

    def idempotents(self) -> typing.List[Element]:
        return [e for e in self.representative if self.product(e, e) == e]

    def proper_pairs(self) -> typing.List[Pair]:
        """ Pairs (s, e) with e idempotent and s * e = s. Their languages s e^omega cover
        every infinite word and all words of one pair share every regular property the
        monoid recognizes """
        idempotents = self.idempotents()
        return [
            (s, e)
            for s in self.representative
            for e in idempotents
            if self.product(s, e) == s
        ]

    def lasso(self, pair: Pair) -> LassoWord:
        """ A lasso word of the pair language """
        prefix, period = pair
        return LassoWord(self.representative[prefix], self.representative[period])

    def __len__(self) -> int:
        return len(self.representative)


def pair_language_automaton(
    monoid: TransitionMonoid, pairs: typing.Iterable[Pair]
) -> BuchiAutomaton:
    """ Buchi automaton of the union of the pair languages s e^omega: a deterministic prefix
    phase tracks the element read so far and guesses where the periodic part starts, every
    accepting visit closes one block of element e """
    by_prefix: typing.Dict[typing.Any, typing.List[typing.Any]] = {}
    for prefix, period in pairs:
        by_prefix.setdefault(prefix, []).append(period)

    def extend(element, letter):
        if element is None:
            return monoid.generators[letter]
        return monoid.step(element, letter)

    def successors(state, letter):
        if state[0] == "pre":
            element = extend(state[1], letter)
            yield "pre", element
            for period in by_prefix.get(element, ()):
                yield "acc", period
        else:
            period = state[1]
            block = extend(state[2] if state[0] == "blk" else None, letter)
            yield "blk", period, block
            if block == period:
                yield "acc", period

    return explore(
        monoid.alphabet,
        [("pre", None)],
        successors,
        lambda state: state[0] == "acc",
        "pair language automaton",
    )


def letter_matrix(automaton: BuchiAutomaton, letter: str) -> Matrix:
    """ Entry p, q: 0 without a transition, 2 when q is accepting, else 1 """
    index = {state: i for i, state in enumerate(automaton.states)}
    size = len(index)
    rows = [[NONE] * size for _ in range(size)]
    for state in automaton.states:
        for target in automaton.successors(state, letter):
            value = ACCEPTING_VISIT if automaton.is_accepting(target) else VISIT
            rows[index[state]][index[target]] = max(rows[index[state]][index[target]], value)
    return tuple(tuple(row) for row in rows)


def multiply_matrices(left: Matrix, right: Matrix) -> Matrix:
    size = len(left)
    result = []
    for i in range(size):
        row = []
        for k in range(size):
            best = NONE
            for j in range(size):
                a, b = left[i][j], right[j][k]
                if a and b and max(a, b) > best:
                    best = max(a, b)
            row.append(best)
        result.append(tuple(row))
    return tuple(result)


def identity_matrix(size: int) -> Matrix:
    return tuple(tuple(VISIT if i == j else NONE for j in range(size)) for i in range(size))


class Supergraph(TransitionMonoid[Matrix]):
    """ Monoid of run summaries of a Buchi automaton: for a finite word, which states reach
    which and whether an accepting state can be visited on the way """

    def __init__(self, automaton: BuchiAutomaton):
        self.automaton = cobuchi_to_buchi(automaton)
        self.initial_rows = [self.automaton.index(state) for state in self.automaton.initial]
        super().__init__(
            self.automaton.alphabet,
            {letter: letter_matrix(self.automaton, letter) for letter in self.automaton.alphabet},
            multiply_matrices,
            identity_matrix(len(self.automaton.states)),
            "supergraph monoid",
        )

    def pair_accepts(self, prefix: Matrix, period: Matrix) -> bool:
        return matrix_pair_accepts(self.initial_rows, prefix, period)

    def accepts_after(self, prefix: Matrix, cycle: Matrix) -> bool:
        """ Same test for an arbitrary element, through its idempotent power """
        return self.pair_accepts(prefix, idempotent_power(cycle, self.product))


def idempotent_power(element: Element, multiply: typing.Callable[[Element, Element], Element]):
    power = element
    while multiply(power, power) != power:
        power = multiply(power, element)
    return power


def matrix_pair_accepts(
    initial_rows: typing.Iterable[int], prefix: Matrix, period: Matrix
) -> bool:
    """ Whether the words of s e^omega are accepted, e idempotent """
    return any(
        prefix[p][q] and period[q][q] == ACCEPTING_VISIT
        for p in initial_rows
        for q in range(len(period))
    )
