import pytest

from qlatk import (
    AcceptanceMode,
    AlphabetMismatchError,
    BuchiBuilder,
    LassoWord,
    complement,
    empty_automaton,
    includes,
    intersect,
    is_empty,
    is_infinite,
    safety_closure,
    union,
    universal_automaton,
)
from qlatk.omega import (
    accepts,
    cobuchi_to_buchi,
    diff_is_infinite,
    has_infinitely_ambiguous_word,
    lasso_automaton,
    live_states,
)
from qlatk.qwa import lassos

from .conftest import AB, finitely_many_b, random_automaton, random_lasso

WORDS = ["; a", "; b", "a ; b", "b ; a", "; a b", "a a ; b a", "b ; a a b"]


def test_emptiness_witness(sample):
    automaton = sample("sigma-star-b-omega.ba")
    result = is_empty(automaton)
    assert not result.empty
    assert accepts(automaton, result.witness.word)
    assert is_empty(empty_automaton(AB)).empty


def test_lasso_membership(sample):
    automaton = sample("a-sigma.ba")
    accepted = [word for word in WORDS if accepts(automaton, LassoWord.parse(word))]
    assert accepted == ["; a", "a ; b", "; a b", "a a ; b a"]


def test_cobuchi_membership():
    automaton = finitely_many_b()
    assert accepts(automaton, LassoWord.parse("b b ; a"))
    assert not accepts(automaton, LassoWord.parse("; a b"))
    assert cobuchi_to_buchi(automaton).mode is AcceptanceMode.BUCHI


def test_product_alphabets(sample):
    with pytest.raises(AlphabetMismatchError):
        intersect(sample("a-sigma.ba"), sample("sigma-star-b-omega.ba"))


def test_intersect_union(sample):
    a_sigma = sample("a-sigma.ba")
    both = intersect(a_sigma, finitely_many_b())
    either = union(a_sigma, finitely_many_b())
    for literal in WORDS:
        word = LassoWord.parse(literal)
        left, right = accepts(a_sigma, word), accepts(finitely_many_b(), word)
        assert accepts(both, word) == (left and right)
        assert accepts(either, word) == (left or right)


@pytest.mark.parametrize("construction", ["rank", "ramsey"])
def test_complement_fixed(sample, construction):
    automaton = sample("a-sigma.ba")
    complemented = complement(automaton, construction)
    for literal in WORDS:
        word = LassoWord.parse(literal)
        assert accepts(complemented, word) != accepts(automaton, word)


@pytest.mark.parametrize("construction", ["rank", "ramsey"])
def test_complement_random(rng, construction):
    for _ in range(10):
        automaton = random_automaton(rng, 2)
        complemented = complement(automaton, construction)
        for _ in range(10):
            word = random_lasso(rng, 4)
            assert accepts(complemented, word) != accepts(automaton, word)


def test_inclusion(sample):
    automaton = sample("sigma-star-b-omega.ba")
    universal = universal_automaton(automaton.alphabet)
    assert includes(automaton, universal)
    result = includes(universal, automaton)
    assert not result
    assert not accepts(automaton, result.counterexample.word)


def test_infinite_languages(sample):
    assert is_infinite(sample("a-sigma.ba"))
    assert is_infinite(universal_automaton(AB))
    assert not is_infinite(lasso_automaton(LassoWord.parse("a ; b a"), AB))
    assert not is_infinite(empty_automaton(AB))


def test_infinite_languages_against_accepted_lassos(rng):
    # a finite language only holds words of canonical size up to the number of states
    for states, bound in ((1, 3), (2, 8)):
        words = list(lassos(AB, bound))
        for _ in range(25):
            automaton = random_automaton(rng, states)
            sizes = (word.size for word in words if accepts(automaton, word))
            assert is_infinite(automaton) == any(size > states for size in sizes)


def test_diff_is_infinite():
    single = lasso_automaton(LassoWord.parse("; a"), AB)
    assert diff_is_infinite(universal_automaton(AB), single)
    assert not diff_is_infinite(single, universal_automaton(AB))


def test_safety_closure(sample):
    automaton = sample("sigma-star-b-omega.ba")
    assert includes(universal_automaton(automaton.alphabet), safety_closure(automaton))
    closure = safety_closure(sample("a-sigma.ba"))
    assert accepts(closure, LassoWord.parse("a ; b"))
    assert not accepts(closure, LassoWord.parse("b ; a"))


def test_live_states():
    automaton = (
        BuchiBuilder(AB)
        .initial_state(0)
        .accept(1)
        .add(0, "a", 1)
        .add(1, "a", 1)
        .add(0, "b", 2)
        .add(2, "b", 2)
        .build()
    )
    assert live_states(automaton) == {0, 1}


def test_ambiguity():
    ambiguous = (
        BuchiBuilder(["a"])
        .initial_state("p")
        .accept("q")
        .add("p", "a", "p")
        .add("p", "a", "q")
        .add("q", "a", "q")
        .build()
    )
    assert has_infinitely_ambiguous_word(ambiguous)
    assert not has_infinitely_ambiguous_word(universal_automaton(AB))
