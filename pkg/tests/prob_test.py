from fractions import Fraction

import pytest

from qlatk import (
    AlphabetMismatchError,
    InvalidSpecError,
    LassoWord,
    MarkovChain,
    Unsupported,
    UnsupportedReason,
    complement,
    eval_markov,
    make_spec,
    measure_buchi,
    universal_automaton,
)
from qlatk.oracle import sample_markov
from qlatk.prob import expected_value, product_chain, running_extremum

from .conftest import AB, finitely_many_b, qwa, random_automaton, random_chain, single_state

HALF = Fraction(1, 2)


def test_measure_buchi(sample):
    uniform = MarkovChain.uniform(AB)
    assert measure_buchi(universal_automaton(AB), uniform) == 1
    assert measure_buchi(sample("a-sigma.ba"), sample("uniform-ab.mc")) == HALF
    assert measure_buchi(finitely_many_b(), uniform) == 0
    often = sample("sigma-star-b-omega.ba")
    assert measure_buchi(often, MarkovChain.uniform(often.alphabet)) == 1
    assert measure_buchi(sample("req-req.ba"), sample("sim-generator.mc")) == 1


def test_measure_of_lasso_chains(sample):
    automaton = sample("a-sigma.ba")
    assert measure_buchi(automaton, MarkovChain.from_lasso(LassoWord.parse("a ; b"))) == 1
    assert measure_buchi(automaton, MarkovChain.from_lasso(LassoWord.parse("b ; a"))) == 0


def test_measure_letters(sample):
    with pytest.raises(AlphabetMismatchError):
        measure_buchi(sample("a-sigma.ba"), sample("uniform-com.mc"))


def test_expected_values(sample):
    com, uniform = sample("com.qwa"), sample("uniform-com.mc")
    assert expected_value(qwa(com, "exp", "limsup"), uniform) == 5
    assert expected_value(qwa(com, "exp", "limsupavg"), uniform) == Fraction(11, 10)
    assert expected_value(qwa(com, "exp", "sup"), uniform) == 5
    assert expected_value(qwa(com, "exp", "inf"), uniform) == 1


def test_expected_discounted_sum(sample):
    spec = make_spec(sample("sim.qwa"), "exp", "sup", "dsum", HALF)
    assert eval_markov(spec, sample("sim-generator.mc")).value == Fraction(2, 11)
    coin = make_spec(single_state(a=0, b=1), "exp", "exp", "dsum", HALF)
    assert eval_markov(coin, MarkovChain.uniform(AB)).value == 1


def test_eval_markov_word_aggregators(sample):
    com, uniform = sample("com.qwa"), sample("uniform-com.mc")
    assert eval_markov(make_spec(com, "exp", "sup", "limsup"), uniform).value == 5
    assert eval_markov(make_spec(com, "exp", "inf", "limsup"), uniform).value == 1


def test_eval_markov_deterministic(sample):
    up = sample("up.qwa")
    spec = make_spec(up, "exp", "sup", "liminfavg")
    assert eval_markov(spec, MarkovChain.uniform(up.alphabet)).value == HALF


def test_eval_markov_refusals(sample):
    com, uniform = sample("com.qwa"), sample("uniform-com.mc")
    assert eval_markov(make_spec(com, "exp", "sup", "liminfavg"), uniform) == Unsupported(
        UnsupportedReason.UNDECIDABLE, "stochastic:avg"
    )
    with pytest.raises(InvalidSpecError):
        eval_markov(make_spec(com, "sup", "sup", "sup"), uniform)
    with pytest.raises(AlphabetMismatchError):
        eval_markov(make_spec(com, "exp", "exp", "sup"), MarkovChain.uniform(AB))


def test_product_chain(sample):
    product = product_chain(qwa(sample("com.qwa"), "exp", "sup"), sample("uniform-com.mc"))
    assert set(product.states) == {("0", "0"), ("0", "1"), ("0", "2")}
    assert {edge.letter for edge in product.edges(("0", "2"))} == {("send", 1), ("ack", 5)}
    extremum = running_extremum(product, qwa(sample("com.qwa"), "exp", "sup").f)
    assert (("0", "0"), 5) in extremum.states


def test_measure_of_complement(rng):
    for index in range(200):
        automaton = random_automaton(rng, 2 if index % 10 == 0 else 1)
        chain = random_chain(rng, rng.randint(1, 3))
        assert measure_buchi(automaton, chain) + measure_buchi(complement(automaton), chain) == 1


def frequency(words, holds) -> float:
    return sum(1 for word in words if holds(word)) / len(words)


def test_monte_carlo_measures(sample, rng):
    def starts_with_a(word):
        return word[0] == "a"

    def two_requests(word):
        return ("req", "req") in zip(word, word[1:])

    def late_off(word):
        return "off" in word[-10:]

    often = sample("sigma-star-b-omega.ba")
    cases = [
        (sample("a-sigma.ba"), sample("uniform-ab.mc"), starts_with_a, 1),
        (sample("req-req.ba"), sample("sim-generator.mc"), two_requests, 50),
        (often, MarkovChain.uniform(often.alphabet), late_off, 10),
    ]
    for automaton, chain, holds, horizon in cases:
        words = sample_markov(chain, 5000, horizon, seed=rng)
        assert abs(frequency(words, holds) - float(measure_buchi(automaton, chain))) < 0.02


def run_weights(system, word):
    state = system.initial_states[0]
    for letter in word:
        (transition,) = system.successors(state, letter)
        yield float(transition.weight)
        state = transition.target


def test_monte_carlo_expected_values(sample, rng):
    sim, generator = sample("sim.qwa"), sample("sim-generator.mc")
    discounted = eval_markov(make_spec(sim, "exp", "sup", "dsum", HALF), generator).value
    words = sample_markov(generator, 20000, 40, seed=rng)
    totals = [
        sum(weight * 0.5 ** i for i, weight in enumerate(run_weights(sim, word)))
        for word in words
    ]
    assert abs(sum(totals) / len(totals) - float(discounted.fraction)) < 0.02

    up = sample("up.qwa")
    uniform = MarkovChain.uniform(up.alphabet)
    average = eval_markov(make_spec(up, "exp", "sup", "liminfavg"), uniform).value
    words = sample_markov(uniform, 5000, 100, seed=rng)
    means = [sum(run_weights(up, word)) / len(word) for word in words]
    assert abs(sum(means) / len(means) - float(average.fraction)) < 0.02
