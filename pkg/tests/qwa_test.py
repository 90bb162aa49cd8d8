from fractions import Fraction

import pytest

from qlatk import (
    ExtValue,
    LassoWord,
    RunAggregator,
    UnknownLetterError,
    Unsupported,
    UnsupportedAggregationError,
    UnsupportedReason,
    Value,
    WltsBuilder,
    bottom_value,
    eval_lasso,
    threshold_automaton,
    top_value,
)
from qlatk.omega import accepts, has_infinitely_ambiguous_word, is_empty
from qlatk.oracle import lasso_product, lasso_runs, run_value
from qlatk.qwa import (
    exact_runs_automaton,
    has_parallel_transitions,
    inf_runs_automaton,
    lasso_sweep,
    lassos,
    lift_word_agg_to_limit,
    lower_limit_word_agg,
    to_limit_run_aggregator,
    value_language,
)

from .conftest import AB, leaking_system, qwa, random_lasso, random_system, single_state

HALF = Fraction(1, 2)


def value(spec, literal):
    return eval_lasso(spec, LassoWord.parse(literal))


def test_eval_lasso_examples(sample):
    assert value(qwa(sample("up.qwa"), "sup", "liminfavg"), "; on off") == HALF
    assert value(qwa(sample("sim.qwa"), "sup", "dsum", HALF), "req idle ; req") == Fraction(1, 4)
    assert value(qwa(sample("sta.qwa"), "sup", "sup"), "; l r") == 2
    assert value(qwa(sample("sta.qwa"), "inf", "sup"), "; l r") == 1
    assert value(qwa(sample("com.qwa"), "exp", "limsup"), "; send ack") == 5


def test_eval_lasso_unknown_letter(sample):
    with pytest.raises(UnknownLetterError):
        value(qwa(sample("up.qwa")), "; on standby")


def test_eval_lasso_limit_word_aggregation():
    system = leaking_system()
    assert value(qwa(system, "sup", "limsup"), "; a") == 1
    assert value(qwa(system, "limsup", "limsup"), "; a") == 0
    assert value(qwa(system, "liminf", "limsup"), "; a") == 0
    assert value(qwa(system, "limsup", "limsupavg"), "; a") == 0
    with pytest.raises(UnsupportedAggregationError):
        value(qwa(system, "limsup", "dsum", HALF), "; a")


def test_top_bottom(sample):
    up = qwa(sample("up.qwa"), "sup", "liminfavg")
    assert top_value(up).value == 1
    assert bottom_value(up).value == 0
    sta = qwa(sample("sta.qwa"), "sup", "sup")
    assert top_value(sta).value == 3
    assert bottom_value(sta).value == 1


def test_top_bottom_refusals(sample):
    com = sample("com.qwa")
    assert bottom_value(qwa(com, "sup", "liminfavg")) == Unsupported(
        UnsupportedReason.UNDECIDABLE, "bottom:avg"
    )
    assert top_value(qwa(com, "exp", "sup")) == Unsupported(
        UnsupportedReason.UNDECIDABLE, "extremum:exp"
    )


def test_top_value_limit_witness():
    spec = qwa(leaking_system(), "limsup", "limsup")
    top = top_value(spec)
    assert isinstance(top, Value)
    assert top.value == 0
    assert eval_lasso(spec, top.witness) == 0


def test_lassos():
    words = list(lassos(AB, 2))
    assert [str(word) for word in words] == ["; a", "; b", "; a b", "a ; b", "; b a", "b ; a"]


def test_lasso_sweep(sample):
    sweep = lasso_sweep(qwa(sample("up.qwa"), "sup", "liminfavg"), 2)
    assert len(sweep) == 6
    assert {result for _, result in sweep} == {0, HALF, 1}


def test_threshold_automata(sample):
    spec = qwa(sample("up.qwa"), "sup", "limsup")
    often = threshold_automaton(spec, 1)
    assert accepts(often, LassoWord.parse("; on off"))
    assert not accepts(often, LassoWord.parse("on ; off"))
    assert accepts(threshold_automaton(spec, 0, ">"), LassoWord.parse("off ; off on"))
    assert is_empty(threshold_automaton(spec, 1, ">")).empty
    assert accepts(value_language(spec, 0), LassoWord.parse("on ; off"))
    with pytest.raises(UnsupportedAggregationError):
        threshold_automaton(qwa(sample("up.qwa"), "sup", "limsupavg"), 0)


def test_to_limit_run_aggregator(sample):
    spec = qwa(sample("sta.qwa"), "sup", "sup")
    converted = to_limit_run_aggregator(spec)
    assert converted.f is RunAggregator.LIM_SUP
    for word in lassos(spec.alphabet, 3):
        assert eval_lasso(converted, word) == eval_lasso(spec, word)


def test_lift_word_aggregator():
    lifted = lift_word_agg_to_limit(qwa(leaking_system(), "sup", "limsup"))
    assert value(lifted, "; a") == 1


def test_lower_limit_word_aggregator():
    lowered = lower_limit_word_agg(qwa(leaking_system(), "limsup", "limsup"))
    assert value(lowered, "; a") == 0


def test_inf_runs_automaton():
    spec = qwa(leaking_system(), "limsup", "limsup")
    assert accepts(inf_runs_automaton(spec, 0), LassoWord.parse("; a"))
    assert is_empty(inf_runs_automaton(spec, 1)).empty


def test_exact_runs_match_value_runs():
    spec = qwa(leaking_system(), "sup", "limsup")
    # a^omega has one run of value 1 and infinitely many of value 0
    assert not has_infinitely_ambiguous_word(exact_runs_automaton(spec, 1))
    assert has_infinitely_ambiguous_word(exact_runs_automaton(spec, 0))
    for f in ("limsup", "liminf", "sup", "inf"):
        only = qwa(single_state(a=1, b=0), "sup", f)
        for x in (0, 1):
            assert not has_infinitely_ambiguous_word(exact_runs_automaton(only, x))


def test_exact_runs_on_deterministic_systems(rng):
    for states in (1, 2, 3):
        system = random_system(rng, states, branching=1, weights=(0, 1, 2))
        for f in ("limsup", "liminf"):
            spec = qwa(system, "sup", f)
            for x in system.weights():
                assert not has_infinitely_ambiguous_word(exact_runs_automaton(spec, x))


def test_exact_runs_parallel_transitions():
    system = WltsBuilder(["a"]).add("p", "a", 0, "p").add("p", "a", 1, "p").build()
    spec = qwa(system, "sup", "limsup")
    assert not has_parallel_transitions(leaking_system())
    assert has_parallel_transitions(system)
    assert has_infinitely_ambiguous_word(exact_runs_automaton(spec, 1))
    assert accepts(exact_runs_automaton(spec, 0), LassoWord.parse("; a"))


def test_value_language_agrees_with_eval_lasso(rng):
    words = list(lassos(AB, 3))
    for states in (1, 2):
        system = random_system(rng, states)
        for f in ("limsup", "liminf"):
            spec = qwa(system, "sup", f)
            for x in system.weights():
                language = value_language(spec, x)
                for word in words:
                    assert accepts(language, word) == (eval_lasso(spec, word) == x), str(word)


def test_conversions_keep_lasso_values(rng):
    for index in range(10):
        system = random_system(rng, rng.randint(1, 2), weights=(0, 1, 2))
        bounded = qwa(system, rng.choice(("sup", "inf")), rng.choice(("sup", "inf")))
        word_level = qwa(
            system,
            rng.choice(("sup", "inf")),
            rng.choice(("inf", "sup", "liminf", "limsup", "liminfavg")),
        )
        limit = qwa(
            system,
            rng.choice(("limsup", "liminf")),
            rng.choice(("inf", "sup", "liminf", "limsup")),
        )
        pairs = [
            (bounded, to_limit_run_aggregator(bounded)),
            (word_level, lift_word_agg_to_limit(word_level)),
            (limit, lower_limit_word_agg(limit)),
        ]
        for _ in range(50):
            word = random_lasso(rng, rng.randint(1, 6))
            for spec, converted in pairs:
                assert eval_lasso(converted, word) == eval_lasso(spec, word), (spec, str(word))


def test_lift_gives_every_run_value_infinitely_many_runs(rng):
    for _ in range(5):
        system = random_system(rng, rng.randint(1, 2))
        f = rng.choice(("inf", "sup", "liminf", "limsup"))
        spec = qwa(system, "sup", f)
        lifted = lift_word_agg_to_limit(spec)
        automata = {x: inf_runs_automaton(lifted, x) for x in system.weights()}
        for _ in range(20):
            word = random_lasso(rng, rng.randint(1, 6))
            runs = lasso_runs(lasso_product(spec, word))
            values = {run_value(spec.f, run, None) for run in runs}
            for x, automaton in automata.items():
                assert accepts(automaton, word) == (x in values), (f, x, str(word))


def test_average_bottom_approached_by_lassos(sample):
    for name, size in (("up.qwa", 8), ("sim.qwa", 5)):
        spec = qwa(sample(name), "sup", "limsupavg")
        bottom = bottom_value(spec).value
        closest = min(result for _, result in lasso_sweep(spec, size))
        assert bottom <= closest <= bottom.fraction + Fraction(1, 10)


def test_discounted_bottom_approached_by_lassos(sample):
    spec = qwa(sample("sim.qwa"), "sup", "dsum", HALF)
    bottom = bottom_value(spec)
    assert bottom == Value(ExtValue.of(0))
    sweep = lasso_sweep(spec, 4)
    closest = [min(result for word, result in sweep if word.size <= size) for size in (1, 2, 3, 4)]
    assert closest == sorted(closest, reverse=True)
    assert closest[-1] == bottom.value
    assert all(result >= bottom.value for _, result in sweep)
