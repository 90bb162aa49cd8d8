from fractions import Fraction

import pytest
from pytest_mock import MockerFixture

from qlatk import (
    MINUS_INFINITY,
    PLUS_INFINITY,
    AcceptanceMode,
    BuchiBuilder,
    ConstructionLimitError,
    Decision,
    ExtValue,
    InvalidSpecError,
    InvalidSystemError,
    LassoWord,
    MarkovBuilder,
    MarkovChain,
    ParseError,
    QLATKError,
    RunAggregator,
    Settings,
    Transition,
    Unsupported,
    UnsupportedReason,
    Value,
    ViolationKind,
    Wlts,
    WltsBuilder,
    WordAggregator,
    complete_buchi,
    configure,
    dual,
    dual_qla,
    exit_code,
    get_settings,
    make_spec,
    parallel_map,
    parse_rational,
    render_rational,
    separate_parallel_transitions,
    validate,
)
from qlatk.core.wlts_validator import TargetValidator
from qlatk.omega import accepts

from .conftest import AB, qwa, single_state


def test_ext_value_order():
    values = [PLUS_INFINITY, ExtValue.of(Fraction(1, 2)), MINUS_INFINITY, ExtValue.of(-3)]
    assert sorted(values) == [MINUS_INFINITY, ExtValue.of(-3), Fraction(1, 2), PLUS_INFINITY]
    assert -PLUS_INFINITY == MINUS_INFINITY
    assert -ExtValue.of(2) == -2
    assert ExtValue.of(1) == 1
    assert len({ExtValue.of(1), ExtValue.of(Fraction(2, 2))}) == 1


def test_ext_value_render():
    assert ExtValue.of(2).render() == "2/1"
    assert ExtValue.of(Fraction(-1, 4)).render() == "-1/4"
    assert PLUS_INFINITY.render() == "inf"
    assert ExtValue.parse("-inf") == MINUS_INFINITY
    assert ExtValue.parse("6/4") == Fraction(3, 2)


def test_parse_rational():
    assert parse_rational(" 3/6 ") == Fraction(1, 2)
    assert parse_rational("-7") == -7
    assert render_rational(Fraction(4, 2)) == "2/1"
    for literal in ("0.5", "1/0", "1e3", ""):
        with pytest.raises(QLATKError):
            parse_rational(literal)


def test_lasso_parse():
    word = LassoWord.parse("on ; on off")
    assert word.prefix == ("on",)
    assert word.period == ("on", "off")
    assert word.size == 3
    assert word.unroll(6) == ("on", "on", "off", "on", "off", "on")
    assert str(LassoWord.parse(" ; l r")) == "; l r"
    with pytest.raises(ParseError()):
        LassoWord.parse("a b")
    with pytest.raises(ParseError()):
        LassoWord.parse("a ; b ; c")
    with pytest.raises(ParseError()):
        LassoWord.parse("a ;")


def test_lasso_canonical():
    word = LassoWord.of("ab", "abab")
    assert word.canonical() == LassoWord.of("", "ab")
    assert word.same_word(LassoWord.of("a", "ba"))
    assert not word.same_word(LassoWord.of("", "ba"))


def test_lasso_alphabet():
    word = LassoWord.parse("a ; c")
    assert LassoWord.parse("a ; b").check_alphabet(AB)
    with pytest.raises(QLATKError):
        word.check_alphabet(AB)


def test_wlts_builder_defaults():
    system = (
        WltsBuilder(AB)
        .add("q", "a", 1, "q")
        .add("q", "a", 0, "p")
        .add("q", "b", 1, "q")
        .add("q", "b", 1, "q")
        .add("p", "a", 0, "p")
        .add("p", "b", 0, "p")
        .build()
    )
    assert system.initial == {"q": 1}
    assert [t.prob for t in system.successors("q", "a")] == [Fraction(1, 2)] * 2
    assert len(system.successors("q", "b")) == 1
    assert system.successors("q", "b")[0].prob == 1
    assert system.weights() == [0, 1]
    assert not system.is_deterministic()


def test_wlts_builder_violations():
    with pytest.raises(InvalidSystemError) as info:
        WltsBuilder(AB).add("q", "a", 1, "q").build()
    (violation,) = info.value.violations
    assert violation.kind is ViolationKind.COMPLETENESS
    assert (violation.state, violation.letter) == ("q", "b")

    builder = WltsBuilder(["a"]).add("q", "a", 0, "q", Fraction(1, 2))
    with pytest.raises(InvalidSystemError) as info:
        builder.add("q", "a", 1, "q", Fraction(1, 3)).build()
    assert ViolationKind.PROBABILITY_SUM in {v.kind for v in info.value.violations}


def test_dual_negates_weights():
    system = single_state(a=3, b=-1)
    assert dual(system).weights() == [-3, 1]
    assert dual(dual(system)) == system


def test_dual_qla():
    spec = make_spec(single_state(a=2, b=1), "limsup", "inf", "liminfavg")
    flipped = dual_qla(spec)
    assert (flipped.h, flipped.g, flipped.f) == (
        WordAggregator.LIM_INF,
        WordAggregator.SUP,
        RunAggregator.LIM_SUP_AVG,
    )
    assert flipped.system.weights() == [-2, -1]
    assert dual_qla(flipped) == spec


def test_validate_collects_violations():
    system = WltsBuilder(AB).add("q", "a", 1, "q").add("q", "a", 2, "p").build(validate=False)
    pairs = [(v.kind, v.state, v.letter) for v in validate(system)]
    assert pairs == [
        (ViolationKind.COMPLETENESS, "q", "b"),
        (ViolationKind.COMPLETENESS, "p", "a"),
        (ViolationKind.COMPLETENESS, "p", "b"),
    ]

    dangling = Wlts(("a",), ("q",), {"q": Fraction(1)}, {("q", "a"): (Transition(0, 1, "p"),)})
    (violation,) = validate(dangling)
    assert violation.kind is ViolationKind.UNKNOWN_STATE
    assert validate(dangling, [TargetValidator()])[0].detail == "target 'p'"


def test_complete_buchi():
    partial = BuchiBuilder(AB).initial_state("s").accept("s").add("s", "a", "s").build()
    completed = complete_buchi(partial)
    assert completed.is_complete()
    assert len(completed.states) == 2
    assert accepts(completed, LassoWord.parse("; a"))
    assert not accepts(completed, LassoWord.parse("a ; b"))

    safe = BuchiBuilder(AB, AcceptanceMode.CO_BUCHI).initial_state("s").add("s", "a", "s")
    completed = complete_buchi(safe.build())
    assert accepts(completed, LassoWord.parse("; a"))
    assert not accepts(completed, LassoWord.parse("; b"))


def test_separate_parallel_transitions():
    system = WltsBuilder(["a"]).add("q", "a", 0, "q").add("q", "a", 1, "q").build()
    separated = separate_parallel_transitions(system)
    assert separated.initial_states == (("q", None),)
    targets = [t.target for t in separated.successors(("q", None), "a")]
    assert targets == [("q", 0), ("q", 1)]
    assert all(t.target[1] == t.weight for _, _, t in separated.edges())


def test_spec_discount():
    system = single_state()
    with pytest.raises(InvalidSpecError):
        qwa(system, f="dsum")
    with pytest.raises(InvalidSpecError):
        qwa(system, f="dsum", discount=Fraction(1))
    with pytest.raises(InvalidSpecError):
        qwa(system, f="sup", discount=Fraction(1, 2))
    with pytest.raises(InvalidSpecError):
        make_spec(system, "sup", "sometimes", "sup")
    spec = make_spec(system, "sup", "inf", "dsum", Fraction(1, 2))
    assert spec.dual().h is WordAggregator.INF
    assert spec.dual().g is WordAggregator.SUP
    assert spec.dual().f is RunAggregator.DSUM


def test_aggregator_families():
    assert RunAggregator.LIM_INF_AVG.dual is RunAggregator.LIM_SUP_AVG
    assert [f.family for f in (RunAggregator.SUP, RunAggregator.LIM_SUP_AVG)] == ["std", "avg"]
    assert RunAggregator.DSUM.family == "dsum"
    assert not RunAggregator.DSUM.is_prefix_independent
    assert WordAggregator.LIM_SUP.plain is WordAggregator.SUP
    assert WordAggregator.INF.limit is WordAggregator.LIM_INF
    assert WordAggregator.EXP.dual is WordAggregator.EXP


def test_markov_chain():
    chain = MarkovChain.from_lasso(LassoWord.parse("x ; a b"))
    assert chain.alphabet == ("x", "a", "b")
    assert chain.edges(2)[0].target == 1
    assert MarkovChain.uniform(AB).edges(0)[1].prob == Fraction(1, 2)
    with pytest.raises(InvalidSystemError):
        MarkovBuilder().add(0, "a", Fraction(1, 2), 0).build()


def test_settings_from_env():
    settings = Settings.from_env({"QLATK_STATE_CAP": "10", "QLATK_JOBS": "4"})
    assert (settings.state_cap, settings.jobs) == (10, 4)
    assert settings.rank_complement_limit == Settings().rank_complement_limit


def test_settings_from_env_rejects_fractions():
    with pytest.raises(InvalidSpecError):
        Settings.from_env({"QLATK_STATE_CAP": "3/2"})
    assert Settings.from_env({"QLATK_JOBS": "4/2"}).jobs == 2


def test_settings_check_size(mocker: MockerFixture):
    logger = mocker.patch("qlatk.core.config.logger")
    settings = configure(state_cap=10)
    assert get_settings() is settings
    settings.check_size(5, "product")
    logger.warning.assert_not_called()
    settings.check_size(10, "product")
    logger.warning.assert_called_once()
    with pytest.raises(ConstructionLimitError):
        settings.check_size(11, "product")


def test_parallel_map_keeps_order():
    configure(jobs=3)
    assert parallel_map(lambda x: x * x, range(8)) == [x * x for x in range(8)]


def test_outcomes():
    assert Value(ExtValue.of(Fraction(1, 2))).render() == "VALUE 1/2"
    assert Decision(False).render() == "NO"
    refusal = Unsupported(UnsupportedReason.UNDECIDABLE, "emptiness:avg")
    assert refusal.render() == "UNSUPPORTED UNDECIDABLE emptiness:avg"
    assert refusal.to_dict()["tag"] == "emptiness:avg"
    assert [exit_code(Decision(True)), exit_code(refusal)] == [0, 2]
