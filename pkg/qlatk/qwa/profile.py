import typing
from dataclasses import dataclass
from fractions import Fraction

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.buchi import BuchiAutomaton
from qlatk.core.lasso import LassoWord
from qlatk.core.spec import QwaSpec
from qlatk.core.wlts import Wlts
from qlatk.exception_factory import UnsupportedAggregationError
from qlatk.graph import Edge, WeightedDigraph, sccs
from qlatk.modules import logger
from qlatk.omega import (
    TransitionMonoid,
    check_alphabets,
    cobuchi_to_buchi,
    letter_matrix,
    matrix_pair_accepts,
    multiply_matrices,
    pair_language_automaton,
)

from .conversions import to_limit_run_aggregator

State = typing.Hashable
Summary = typing.FrozenSet[typing.Tuple[State, State, Fraction, int]]
Pair = typing.Tuple[typing.Any, typing.Any]

START = ("start",)


@dataclass(frozen=True)
class RunValues:
    """ Values of some run and values of infinitely many runs """

    values: typing.FrozenSet[Fraction]
    infinite: typing.FrozenSet[Fraction]


def letter_summary(system: Wlts, letter: str) -> Summary:
    return frozenset(
        (state, transition.target, transition.weight, 1)
        for state in system.states
        for transition in system.successors(state, letter)
    )


def compose_summaries(
    left: Summary, right: Summary, keep: typing.Callable[[Fraction, Fraction], Fraction]
) -> Summary:
    """ Paths through both words: labels combine with keep, path counts multiply and are
    capped at 2 """
    by_source: typing.Dict[State, list] = {}
    for entry in right:
        by_source.setdefault(entry[0], []).append(entry)
    counts: typing.Dict[typing.Tuple[State, State, Fraction], int] = {}
    for p, q, label, count in left:
        for _, r, other, more in by_source.get(q, ()):
            key = (p, r, keep(label, other))
            counts[key] = min(2, counts.get(key, 0) + count * more)
    return frozenset((p, r, label, count) for (p, r, label), count in counts.items())


def limit_form(spec: QwaSpec) -> QwaSpec:
    if not spec.f.is_standard:
        raise UnsupportedAggregationError(f"lasso profiles do not track {spec.f.value} runs")
    if spec.f in (RunAggregator.INF, RunAggregator.SUP):
        return to_limit_run_aggregator(spec)
    return spec


def run_value_sets(
    graph: WeightedDigraph,
    sources: typing.Iterable[State],
    sup_like: bool,
    count: typing.Callable[[Edge], int] = lambda edge: 1,
) -> RunValues:
    """ LimSup (sup_like) or LimInf values of the infinite paths from sources. A value has
    infinitely many paths iff a cycle can be left, after any number of rounds, towards a
    node from which a path of that value starts """
    sources = [source for source in sources if source in graph]
    graph = graph.subgraph(graph.reachable(sources))
    targets = branch_targets(graph, count)

    values, infinite = set(), set()
    for weight in sorted({edge.weight for edge in graph.edges}):
        kept = graph.filter_edges(
            lambda edge: edge.weight <= weight if sup_like else edge.weight >= weight
        )
        attaining = [
            node
            for component in sccs(kept)
            if not component.trivial
            and any(
                edge.weight == weight and edge.target in component
                for node in component.nodes
                for edge in kept.out_edges(node)
            )
            for node in component.nodes
        ]
        useful = graph.coreachable(attaining)
        if any(source in useful for source in sources):
            values.add(weight)
        if targets & useful:
            infinite.add(weight)
    return RunValues(frozenset(values), frozenset(infinite))


def branch_targets(
    graph: WeightedDigraph, count: typing.Callable[[Edge], int] = lambda edge: 1
) -> typing.Set[State]:
    """ Targets of edges leaving a node of a cycle besides another edge staying on it, and
    of multiple edges along a cycle """
    targets = set()
    for component in sccs(graph):
        if component.trivial:
            continue
        for node in component.nodes:
            edges = graph.out_edges(node)
            inner = [edge for edge in edges if edge.target in component]
            for edge in edges:
                doubled = edge.target in component and count(edge) > 1
                if doubled or any(other is not edge for other in inner):
                    targets.add(edge.target)
    return targets


class LassoProfiles:
    """ Monoid of finite-word summaries joined over several systems and Buchi automata.
    Every infinite word lies in the language s e^omega of some proper pair (s, e), and all
    words of a pair share their run values and automaton memberships, so the pairs give
    exact answers about all words
    Documentation: docs/qwa/profile.md
    """

    def __init__(
        self,
        specs: typing.Sequence[QwaSpec],
        automata: typing.Sequence[BuchiAutomaton] = (),
    ):
        self.original = list(specs)
        self.specs = [limit_form(spec) for spec in specs]
        self.automata = [cobuchi_to_buchi(automaton) for automaton in automata]
        alphabet = check_alphabets(
            *(spec.alphabet for spec in self.specs),
            *(automaton.alphabet for automaton in self.automata),
        )
        keeps = [max if spec.f is RunAggregator.LIM_SUP else min for spec in self.specs]
        systems = len(self.specs)

        def multiply(left, right):
            return tuple(
                compose_summaries(a, b, keep)
                for a, b, keep in zip(left[:systems], right[:systems], keeps)
            ) + tuple(multiply_matrices(a, b) for a, b in zip(left[systems:], right[systems:]))

        generators = {
            letter: tuple(letter_summary(spec.system, letter) for spec in self.specs)
            + tuple(letter_matrix(automaton, letter) for automaton in self.automata)
            for letter in alphabet
        }
        self.monoid = TransitionMonoid(alphabet, generators, multiply, None, "lasso profiles")
        self.pairs: typing.List[Pair] = self.monoid.proper_pairs()
        self._initial_rows = [
            [automaton.index(state) for state in automaton.initial] for automaton in self.automata
        ]
        self._runs: typing.Dict[typing.Tuple[Pair, int], RunValues] = {}
        self._fallback: typing.Dict[int, Fraction] = {}
        logger.debug(f"{len(self.monoid)} lasso profiles give {len(self.pairs)} lasso types")

    def run_values(self, pair: Pair, system: int) -> RunValues:
        key = (pair, system)
        if key not in self._runs:
            spec = self.specs[system]
            initial = set(spec.system.initial_states)
            prefix, period = pair
            blocks = WeightedDigraph([START])
            for p, r, label, count in prefix[system]:
                if p in initial:
                    blocks.add_edge(START, label, r, count)
            for p, r, label, count in period[system]:
                blocks.add_edge(p, label, r, count)
            self._runs[key] = run_value_sets(
                blocks, [START], spec.f is RunAggregator.LIM_SUP, lambda edge: edge.label
            )
        return self._runs[key]

    def accepts(self, pair: Pair, automaton: int) -> bool:
        prefix, period = pair
        position = len(self.specs) + automaton
        return matrix_pair_accepts(
            self._initial_rows[automaton], prefix[position], period[position]
        )

    def word_value(self, pair: Pair, system: int) -> Fraction:
        g = self.specs[system].g
        runs = self.run_values(pair, system)
        if g is WordAggregator.SUP:
            return max(runs.values)
        elif g is WordAggregator.INF:
            return min(runs.values)
        elif g is WordAggregator.LIM_SUP:
            return max(runs.infinite) if runs.infinite else self.fallback(system)
        elif g is WordAggregator.LIM_INF:
            return min(runs.infinite) if runs.infinite else self.fallback(system)
        raise UnsupportedAggregationError("lasso profiles do not aggregate expectations")

    def fallback(self, system: int) -> Fraction:
        """ Value of the words without a value of infinite multiplicity: the bottom value
        for LimSup, the top value for LimInf """
        if system not in self._fallback:
            g = self.specs[system].g
            if not g.is_limit:
                raise UnsupportedAggregationError(f"{g.value} has no multiplicity fallback")
            sup_like = g is WordAggregator.LIM_SUP
            candidates = [
                (max if sup_like else min)(runs.infinite)
                for runs in (self.run_values(pair, system) for pair in self.pairs)
                if runs.infinite
            ]
            weights = self.original[system].system.weights()
            if candidates:
                self._fallback[system] = min(candidates) if sup_like else max(candidates)
            else:
                logger.debug("No word has a value of infinite multiplicity")
                self._fallback[system] = weights[0] if sup_like else weights[-1]
        return self._fallback[system]

    def bottom(self, system: int) -> Fraction:
        return min(self.word_value(pair, system) for pair in self.pairs)

    def top(self, system: int) -> Fraction:
        return max(self.word_value(pair, system) for pair in self.pairs)

    def lasso(self, pair: Pair) -> LassoWord:
        return self.monoid.lasso(pair)

    def language(self, pairs: typing.Iterable[Pair]) -> BuchiAutomaton:
        """ Buchi automaton of the words of the given pairs """
        return pair_language_automaton(self.monoid, pairs)
