import itertools
import typing

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.config import parallel_map
from qlatk.core.lasso import LassoWord
from qlatk.core.markov import MarkovChain
from qlatk.core.spec import QwaSpec
from qlatk.core.value import ExtValue
from qlatk.exception_factory import UnsupportedAggregationError
from qlatk.graph import max_mean_cycle, sccs
from qlatk.modules import logger

from .position_graph import RunGraph, best_run_value, position_graph
from .profile import LassoProfiles, branch_targets, limit_form, run_value_sets


def eval_lasso(spec: QwaSpec, word: LassoWord) -> ExtValue:
    """ Exact value of a lasso word: word aggregation over the runs of the system on the
    positions of the word """
    word.check_alphabet(spec.alphabet)
    g = spec.g
    if g in (WordAggregator.INF, WordAggregator.LIM_INF):
        return -eval_lasso(spec.dual(), word)
    elif g is WordAggregator.EXP:
        from qlatk.prob.expectation import expected_value

        return ExtValue.of(expected_value(spec, MarkovChain.from_lasso(word)))
    elif g is WordAggregator.SUP:
        return best_run_value(position_graph(spec.system, word), spec.f, spec.discount)
    return _limit_value(spec, word)


def _limit_value(spec: QwaSpec, word: LassoWord) -> ExtValue:
    """ Largest value carried by infinitely many runs, the bottom value otherwise """
    if spec.f is RunAggregator.DSUM:
        raise UnsupportedAggregationError("limit word aggregation of dsum runs is not supported")
    elif spec.f.is_average:
        value = _branching_mean(position_graph(spec.system, word).reachable_part())
        if value is None:
            raise UnsupportedAggregationError(
                f"no value of {word} has infinitely many {spec.f.value} runs"
            )
        return value

    limit_spec = limit_form(spec)
    runs = position_graph(limit_spec.system, word)
    values = run_value_sets(runs.graph, runs.initial, limit_spec.f is RunAggregator.LIM_SUP)
    if values.infinite:
        return ExtValue.of(max(values.infinite))
    logger.debug(f"Every value of {word} has finitely many runs, falling back to the bottom")
    return ExtValue.of(LassoProfiles([spec]).fallback(0))


def _branching_mean(runs: RunGraph) -> typing.Optional[ExtValue]:
    graph = runs.graph
    means = {
        component.nodes: max_mean_cycle(graph.subgraph(component.nodes)).value
        for component in sccs(graph)
        if not component.trivial
    }
    best: typing.Optional[ExtValue] = None
    for target in branch_targets(graph):
        reached = graph.reachable([target])
        for nodes, mean in means.items():
            if nodes & reached and (best is None or best < mean):
                best = mean
    return best


def lassos(alphabet: typing.Sequence[str], max_length: int) -> typing.Iterator[LassoWord]:
    """ Distinct lasso words with |u| + |v| <= max_length, shortest first """
    seen = set()
    for length in range(1, max_length + 1):
        for letters in itertools.product(alphabet, repeat=length):
            for split in range(length):
                word = LassoWord(letters[:split], letters[split:]).canonical()
                if word not in seen:
                    seen.add(word)
                    yield word


def lasso_sweep(
    spec: QwaSpec, max_length: int
) -> typing.List[typing.Tuple[LassoWord, ExtValue]]:
    """ Values of every lasso word up to a size, e.g. to approach the top or bottom value
    from inside """
    words = list(lassos(spec.alphabet, max_length))
    logger.debug(f"Sweeping {len(words)} lasso words")
    return list(zip(words, parallel_map(lambda word: eval_lasso(spec, word), words)))
