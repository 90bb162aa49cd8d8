"""Brute-force reference evaluation of word automata on lasso words.

Shares only the model types with the rest of the package: runs are enumerated one by one
on the product of the system with the positions of the word, probabilities are solved
with a plain Gauss-Jordan elimination.
"""
import itertools
import typing
from dataclasses import dataclass
from fractions import Fraction

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.config import get_settings
from qlatk.core.lasso import LassoWord
from qlatk.core.spec import QwaSpec
from qlatk.core.value import ExtValue
from qlatk.exception_factory import OracleLimitError, UnsupportedAggregationError

Node = typing.Tuple[typing.Hashable, int]

FALLBACK_LASSO_SIZE = 5


@dataclass(frozen=True)
class Step:
    weight: Fraction
    prob: Fraction
    target: Node


@dataclass(frozen=True)
class LassoRun:
    stem: typing.Tuple[Fraction, ...]
    cycle: typing.Tuple[Fraction, ...]


@dataclass
class Product:
    initial: typing.Dict[Node, Fraction]
    steps: typing.Dict[Node, typing.List[Step]]

    @property
    def nodes(self) -> typing.List[Node]:
        return list(self.steps)

    def reach(self, node: Node) -> typing.Set[Node]:
        seen, stack = {node}, [node]
        while stack:
            for step in self.steps[stack.pop()]:
                if step.target not in seen:
                    seen.add(step.target)
                    stack.append(step.target)
        return seen


def explore(
    initial: typing.Dict[Node, Fraction], successors: typing.Callable[[Node], typing.List[Step]]
) -> Product:
    product = Product(dict(initial), {})
    stack = list(initial)
    while stack:
        node = stack.pop()
        if node not in product.steps:
            product.steps[node] = successors(node)
            stack.extend(step.target for step in product.steps[node])
    return product


def lasso_product(spec: QwaSpec, word: LassoWord) -> Product:
    system = spec.system

    def successors(node: Node) -> typing.List[Step]:
        state, position = node
        following = word.next_position(position)
        return [
            Step(t.weight, t.prob, (t.target, following))
            for t in system.successors(state, word.letter_at(position))
        ]

    return explore({(q, 0): system.initial[q] for q in system.initial_states}, successors)


def lasso_runs(product: Product) -> typing.Iterator[LassoRun]:
    """ Walks from an initial node until the first repeated node """

    def walk(path: typing.List[Node], weights: typing.List[Fraction]):
        for step in product.steps[path[-1]]:
            if step.target in path:
                start = path.index(step.target)
                yield LassoRun(tuple(weights[:start]), tuple(weights[start:]) + (step.weight,))
            else:
                yield from walk(path + [step.target], weights + [step.weight])

    for node in product.initial:
        yield from walk([node], [])


def run_value(f: RunAggregator, run: LassoRun, discount: typing.Optional[Fraction]) -> Fraction:
    every = run.stem + run.cycle
    if f is RunAggregator.SUP:
        return max(every)
    elif f is RunAggregator.INF:
        return min(every)
    elif f is RunAggregator.LIM_SUP:
        return max(run.cycle)
    elif f is RunAggregator.LIM_INF:
        return min(run.cycle)
    elif f.is_average:
        return sum(run.cycle, Fraction(0)) / len(run.cycle)
    stem = sum((w * discount ** i for i, w in enumerate(run.stem)), Fraction(0))
    cycle = sum((w * discount ** i for i, w in enumerate(run.cycle)), Fraction(0))
    return stem + discount ** len(run.stem) * cycle / (1 - discount ** len(run.cycle))


def gauss_jordan(
    matrix: typing.List[typing.List[Fraction]], rhs: typing.List[Fraction]
) -> typing.List[Fraction]:
    size = len(rhs)
    rows = [list(row) + [value] for row, value in zip(matrix, rhs)]
    for column in range(size):
        pivot = next(i for i in range(column, size) if rows[i][column] != 0)
        rows[column], rows[pivot] = rows[pivot], rows[column]
        head = rows[column][column]
        rows[column] = [value / head for value in rows[column]]
        for i in range(size):
            if i != column and rows[i][column] != 0:
                factor = rows[i][column]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[column])]
    return [row[size] for row in rows]


def bottom_components(product: Product) -> typing.List[typing.FrozenSet[Node]]:
    reach = {node: product.reach(node) for node in product.nodes}
    bottoms = {
        frozenset(reach[node])
        for node in product.nodes
        if all(node in reach[other] for other in reach[node])
    }
    return sorted(bottoms, key=lambda nodes: sorted(map(repr, nodes)))


def absorption(
    product: Product, bottom: typing.FrozenSet[Node], recurrent: typing.Set[Node]
) -> Fraction:
    """ Probability of ending in the bottom component """
    transient = [
        node for node in product.nodes if node not in recurrent and bottom & product.reach(node)
    ]
    position = {node: i for i, node in enumerate(transient)}
    size = len(transient)
    matrix = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    rhs = [Fraction(0)] * len(transient)
    for node in transient:
        for step in product.steps[node]:
            if step.target in bottom:
                rhs[position[node]] += step.prob
            elif step.target in position:
                matrix[position[node]][position[step.target]] -= step.prob
    solution = gauss_jordan(matrix, rhs) if transient else []
    total = Fraction(0)
    for node, prob in product.initial.items():
        if node in bottom:
            total += prob
        elif node in position:
            total += prob * solution[position[node]]
    return total


def long_run_mean(product: Product, bottom: typing.FrozenSet[Node]) -> Fraction:
    nodes = sorted(bottom, key=repr)
    position = {node: i for i, node in enumerate(nodes)}
    size = len(nodes)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for node in nodes:
        for step in product.steps[node]:
            matrix[position[step.target]][position[node]] += step.prob
    for i in range(size):
        matrix[i][i] -= 1
    matrix[-1] = [Fraction(1)] * size
    rhs = [Fraction(0)] * (size - 1) + [Fraction(1)]
    frequency = gauss_jordan(matrix, rhs)
    return sum(
        (
            frequency[position[node]] * step.prob * step.weight
            for node in nodes
            for step in product.steps[node]
        ),
        Fraction(0),
    )


def with_memory(product: Product, f: RunAggregator) -> Product:
    """ Moves the running extremum into the nodes; the weight of a step becomes the new
    extremum """
    keep = max if f is RunAggregator.SUP else min

    def successors(node) -> typing.List[Step]:
        inner, memory = node
        steps = []
        for step in product.steps[inner]:
            value = step.weight if memory is None else keep(memory, step.weight)
            steps.append(Step(value, step.prob, (step.target, value)))
        return steps

    return explore({(node, None): prob for node, prob in product.initial.items()}, successors)


def expected(spec: QwaSpec, product: Product) -> Fraction:
    f = spec.f
    if f is RunAggregator.DSUM:
        nodes = product.nodes
        position = {node: i for i, node in enumerate(nodes)}
        matrix = [[Fraction(int(i == j)) for j in range(len(nodes))] for i in range(len(nodes))]
        rhs = [Fraction(0)] * len(nodes)
        for node in nodes:
            for step in product.steps[node]:
                matrix[position[node]][position[step.target]] -= spec.discount * step.prob
                rhs[position[node]] += step.prob * step.weight
        values = gauss_jordan(matrix, rhs)
        return sum(
            (prob * values[position[node]] for node, prob in product.initial.items()),
            Fraction(0),
        )
    elif f in (RunAggregator.SUP, RunAggregator.INF):
        product, f = with_memory(product, f), RunAggregator.LIM_SUP

    total = Fraction(0)
    bottoms = bottom_components(product)
    recurrent = set().union(*bottoms)
    for bottom in bottoms:
        weights = [step.weight for node in bottom for step in product.steps[node]]
        if f.is_average:
            value = long_run_mean(product, bottom)
        else:
            value = max(weights) if f is RunAggregator.LIM_SUP else min(weights)
        total += absorption(product, bottom, recurrent) * value
    return total


def components(product: Product) -> typing.List[typing.FrozenSet[Node]]:
    reach = {node: product.reach(node) for node in product.nodes}
    found = {
        frozenset(other for other in reach[node] if node in reach[other])
        for node in product.nodes
    }
    return [
        nodes
        for nodes in found
        if any(step.target in nodes for node in nodes for step in product.steps[node])
    ]


def simple_cycles(
    product: Product, nodes: typing.FrozenSet[Node]
) -> typing.Iterator[typing.Tuple[Fraction, ...]]:
    """ Weight sequences of the simple cycles inside a node set, once per starting node """
    order = sorted(nodes, key=repr)
    for rank, start in enumerate(order):
        allowed = set(order[rank:])

        def extend(path, weights):
            for step in product.steps[path[-1]]:
                if step.target == start:
                    yield tuple(weights) + (step.weight,)
                elif step.target in allowed and step.target not in path:
                    yield from extend(path + [step.target], weights + [step.weight])

        yield from extend([start], [])


def cycle_value(f: RunAggregator, cycle: typing.Tuple[Fraction, ...]) -> Fraction:
    return run_value(f, LassoRun((), cycle), None)


def repeated_values(f: RunAggregator, product: Product) -> typing.Set[Fraction]:
    """ Run values carried by infinitely many runs: cycles of a component with more than one
    cycle, or the cycle of a component entered after looping somewhere before. Inf and Sup
    runs first move their running extremum into the nodes, where it stays constant along
    every cycle """
    if f is RunAggregator.DSUM:
        raise UnsupportedAggregationError("no multiplicity count for dsum runs")
    elif f in (RunAggregator.SUP, RunAggregator.INF):
        product, f = with_memory(product, f), RunAggregator.LIM_SUP
    found = components(product)
    values: typing.Set[Fraction] = set()
    for nodes in found:
        inner = sum(
            1 for node in nodes for step in product.steps[node] if step.target in nodes
        )
        looped_before = any(
            other != nodes and nodes & set().union(*(product.reach(n) for n in other))
            for other in found
        )
        if inner > len(nodes) or looped_before:
            values.update(cycle_value(f, cycle) for cycle in simple_cycles(product, nodes))
    return values


def small_lassos(alphabet: typing.Sequence[str], size: int) -> typing.Iterator[LassoWord]:
    seen = set()
    for length in range(1, size + 1):
        for letters in itertools.product(alphabet, repeat=length):
            for split in range(length):
                word = LassoWord(letters[:split], letters[split:]).canonical()
                if word not in seen:
                    seen.add(word)
                    yield word


def brute_fallback(spec: QwaSpec, size: int = FALLBACK_LASSO_SIZE) -> Fraction:
    """ Value of the words without a repeated run value: the least LimSup value (the largest
    LimInf value) of the lasso words up to a size that have one, else the extreme weight """
    g = spec.g
    if not g.is_limit or not spec.f.is_standard:
        raise UnsupportedAggregationError(
            f"no multiplicity fallback for g={g.value} f={spec.f.value}"
        )
    sup_like = g is WordAggregator.LIM_SUP
    found = []
    for word in small_lassos(spec.alphabet, size):
        values = repeated_values(spec.f, lasso_product(spec, word))
        if values:
            found.append(max(values) if sup_like else min(values))
    if found:
        return min(found) if sup_like else max(found)
    weights = spec.system.weights()
    return weights[0] if sup_like else weights[-1]


def brute_eval_lasso(
    spec: QwaSpec, word: LassoWord, fallback: typing.Optional[Fraction] = None
) -> ExtValue:
    """ Value of a lasso word by enumerating the runs. A limit g on a word without repeated
    run values takes the fallback, swept over small lasso words unless given """
    limit = get_settings().oracle_state_limit
    if len(spec.system.states) > limit or word.size > limit:
        raise OracleLimitError(
            f"oracle handles at most {limit} states and lasso size {limit}, got "
            f"{len(spec.system.states)} states and size {word.size}"
        )
    word.check_alphabet(spec.alphabet)
    product = lasso_product(spec, word)
    g = spec.g
    if g is WordAggregator.EXP:
        return ExtValue.of(expected(spec, product))
    elif g in (WordAggregator.SUP, WordAggregator.INF):
        values = [run_value(spec.f, run, spec.discount) for run in lasso_runs(product)]
        return ExtValue.of(max(values) if g is WordAggregator.SUP else min(values))

    values = repeated_values(spec.f, product)
    if values:
        return ExtValue.of(max(values) if g is WordAggregator.LIM_SUP else min(values))
    elif spec.f.is_average:
        raise UnsupportedAggregationError(f"no run value of {word} repeats infinitely often")
    return ExtValue.of(brute_fallback(spec) if fallback is None else fallback)
