import typing
from collections import deque

from qlatk.core.aggregator import RunAggregator, WordAggregator
from qlatk.core.spec import QwaSpec
from qlatk.core.wlts import WltsBuilder, separate_parallel_transitions
from qlatk.exception_factory import UnsupportedAggregationError
from qlatk.modules import logger

SINK = ("sink",)


def to_limit_run_aggregator(spec: QwaSpec) -> QwaSpec:
    """ Sup (Inf) runs become LimSup (LimInf) runs by memorizing the largest (smallest)
    weight seen so far; runs of both systems are in bijection """
    if spec.f not in (RunAggregator.SUP, RunAggregator.INF):
        raise UnsupportedAggregationError(
            f"expected inf or sup run aggregator, got {spec.f.value}"
        )
    keep = max if spec.f is RunAggregator.SUP else min
    weights = spec.system.weights()
    start = weights[0] if spec.f is RunAggregator.SUP else weights[-1]
    system = separate_parallel_transitions(spec.system)

    builder = WltsBuilder(system.alphabet)
    queue = deque()
    for state in system.initial_states:
        builder.initial_state((state, start), system.initial[state])
        queue.append((state, start))
    seen = set(queue)
    while queue:
        state, memory = queue.popleft()
        for letter in system.alphabet:
            for transition in system.successors(state, letter):
                weight = keep(memory, transition.weight)
                target = (transition.target, weight)
                builder.add((state, memory), letter, weight, target, transition.prob)
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
    f = RunAggregator.LIM_SUP if spec.f is RunAggregator.SUP else RunAggregator.LIM_INF
    logger.debug(f"Memorizing the {keep.__name__} weight takes {len(seen)} states")
    return spec.with_system(builder.build()).with_aggregators(f=f)


def lift_word_agg_to_limit(spec: QwaSpec) -> QwaSpec:
    """ Two copies of the system, the first one may jump to the second at every step. Every
    run reappears once per jump position, so every run value gets infinite multiplicity """
    if spec.g not in (WordAggregator.SUP, WordAggregator.INF):
        raise UnsupportedAggregationError(
            f"expected inf or sup word aggregator, got {spec.g.value}"
        )
    system = spec.system
    builder = WltsBuilder(system.alphabet)
    for state in system.initial_states:
        builder.initial_state((state, 0), system.initial[state])
    for state in system.states:
        builder.state((state, 0))
    for state in system.states:
        builder.state((state, 1))
    for state, letter, transition in system.edges():
        weight, prob, target = transition.weight, transition.prob, transition.target
        builder.add((state, 0), letter, weight, (target, 0), prob / 2)
        builder.add((state, 0), letter, weight, (target, 1), prob / 2)
        builder.add((state, 1), letter, weight, (target, 1), prob)
    return spec.with_system(builder.build()).with_aggregators(g=spec.g.limit)


def lower_limit_word_agg(spec: QwaSpec) -> QwaSpec:
    """ LimSup (LimInf) word aggregation as Sup (Inf) of LimSup (LimInf) runs: one component
    per weight x reads the words where x has infinitely many runs and pays x on accepting
    visits, a sink component pays the bottom value everywhere """
    from .inf_runs import inf_runs_automaton
    from .profile import LassoProfiles

    if spec.g is WordAggregator.LIM_INF:
        return lower_limit_word_agg(spec.dual()).dual()
    elif spec.g is not WordAggregator.LIM_SUP:
        raise UnsupportedAggregationError(f"expected a limit word aggregator, got {spec.g.value}")
    elif not spec.f.is_standard:
        raise UnsupportedAggregationError(f"cannot lower {spec.f.value} runs")

    profiles = LassoProfiles([spec])
    bottom = profiles.bottom(0)
    builder = WltsBuilder(spec.alphabet).initial_state(SINK)
    for letter in spec.alphabet:
        builder.add(SINK, letter, bottom, SINK)

    for weight in spec.system.weights():
        if weight <= bottom:
            continue
        automaton = inf_runs_automaton(spec, weight, profiles)
        for state in automaton.initial:
            builder.initial_state((weight, state))
        for state in automaton.states:
            for letter in automaton.alphabet:
                targets = automaton.successors(state, letter)
                if not targets:
                    builder.add((weight, state), letter, bottom, SINK)
                for target in targets:
                    paid = weight if automaton.is_accepting(target) else bottom
                    builder.add((weight, state), letter, paid, (weight, target))
    return QwaSpec(RunAggregator.LIM_SUP, WordAggregator.SUP, builder.build())
