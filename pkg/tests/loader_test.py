from fractions import Fraction

import pytest

from qlatk import (
    AcceptanceMode,
    InvalidSystemError,
    ParseError,
    QLATKError,
    dump_buchi,
    dump_markov,
    dump_qwa,
    load,
    loads_buchi,
    loads_markov,
    loads_qwa,
)
from qlatk.loader.base import state_names

from .conftest import finitely_many_b

COIN = """
# a coin with a biased a
alphabet a b
state p q   # q pays more
initial p
trans p a 1 1/3 q
trans p a 0 2/3 p
trans p b 0 p
trans q a 2 q
trans q b 2 p
"""


def test_loads_qwa():
    system = loads_qwa(COIN)
    assert system.alphabet == ("a", "b")
    assert system.states == ("p", "q")
    assert system.initial == {"p": 1}
    moves = {(t.weight, t.prob, t.target) for t in system.successors("p", "a")}
    assert moves == {(1, Fraction(1, 3), "q"), (0, Fraction(2, 3), "p")}
    assert system.successors("q", "b")[0].prob == 1


@pytest.mark.parametrize(
    "line, message",
    [
        ("weight p a 1 q", "unknown qwa directive"),
        ("trans p c 1 q", "not in the alphabet"),
        ("trans p a 1", "expected 4 or 5 arguments"),
        ("trans p a 0.5 q", "not a rational"),
    ],
)
def test_qwa_parse_errors(line, message):
    text = f"alphabet a b\nstate p\n{line}\n"
    with pytest.raises(ParseError(3)) as e:
        loads_qwa(text)
    assert e.value.code == 3
    assert message in e.value.error_description


def test_any_parse_error_is_caught_by_factory():
    with pytest.raises(ParseError()):
        loads_qwa("alphabet a\nbogus\n")


def test_incomplete_qwa():
    with pytest.raises(InvalidSystemError) as e:
        loads_qwa("alphabet a b\nstate p\ninitial p\ntrans p a 1 p\n")
    assert e.value.violations


def test_qwa_dump_reloads(sample):
    sta = sample("sta.qwa")
    assert loads_qwa(dump_qwa(sta)) == sta


def test_dump_numbers_constructed_states():
    assert state_names(["p", "q"]) == {"p": "p", "q": "q"}
    assert state_names([("p", 1), "q"]) == {("p", 1): "q0", "q": "q1"}


def test_loads_cobuchi():
    automaton = loads_buchi(dump_buchi(finitely_many_b()))
    assert automaton.mode is AcceptanceMode.CO_BUCHI
    assert automaton.accepting == frozenset({"t"})
    assert automaton.successors("s", "b") == ("t",)


def test_buchi_mode_error():
    with pytest.raises(ParseError(2)) as e:
        loads_buchi("alphabet a\nmode rabin\n")
    assert "buchi or cobuchi" in e.value.error_description


def test_loads_markov(sample):
    chain = loads_markov(
        "state 0 1\ninitial 0 1\ntrans 0 a 1/4 1\ntrans 0 b 3/4 0\ntrans 1 a 1 0\n"
    )
    assert chain.alphabet == ("a", "b")
    assert [edge.prob for edge in chain.edges("0")] == [Fraction(1, 4), Fraction(3, 4)]
    uniform = sample("uniform-ab.mc")
    assert loads_markov(dump_markov(uniform)) == uniform


def test_markov_probabilities_must_sum():
    with pytest.raises(InvalidSystemError):
        loads_markov("state 0\ninitial 0 1\ntrans 0 a 1/2 0\n")


def test_load_by_suffix(sample, tmp_path):
    assert sample("a-sigma.ba").initial == ("s",)
    assert sample("uniform-ab.mc").initial == {"0": 1}
    path = tmp_path / "up.txt"
    path.write_text("alphabet a\n", encoding="utf-8")
    with pytest.raises(QLATKError):
        load(path)
