import typing
from dataclasses import dataclass, replace
from fractions import Fraction

from qlatk.exception_factory import InvalidSpecError

from .aggregator import RunAggregator, WordAggregator
from .wlts import Wlts, dual


@dataclass(frozen=True)
class QwaSpec:
    """ Quantitative word automaton: run aggregator f, word aggregator g, discount factor
    for DSum and the transition system
    Documentation: docs/core/spec.md
    """

    f: RunAggregator
    g: WordAggregator
    system: Wlts
    discount: typing.Optional[Fraction] = None

    def __post_init__(self):
        if self.f is RunAggregator.DSUM:
            if self.discount is None:
                raise InvalidSpecError("DSum needs a discount factor")
            if not 0 < self.discount < 1:
                raise InvalidSpecError(f"discount factor {self.discount} is not in (0, 1)")
        elif self.discount is not None:
            raise InvalidSpecError(f"discount factor needs dsum, got {self.f.value}")

    @property
    def alphabet(self) -> typing.Tuple[str, ...]:
        return self.system.alphabet

    def dual(self) -> "QwaSpec":
        return QwaSpec(self.f.dual, self.g.dual, dual(self.system), self.discount)

    def with_system(self, system: Wlts) -> "QwaSpec":
        return replace(self, system=system)

    def with_aggregators(
        self, f: typing.Optional[RunAggregator] = None, g: typing.Optional[WordAggregator] = None
    ) -> "QwaSpec":
        return replace(self, f=f or self.f, g=g or self.g)

    def __repr__(self) -> str:
        discount = f", discount={self.discount}" if self.discount is not None else ""
        return f"<QwaSpec g={self.g.value} f={self.f.value}{discount} {self.system!r}>"


@dataclass(frozen=True)
class QlaSpec:
    """ Quantitative language automaton: language aggregator h over a word automaton """

    h: WordAggregator
    qwa: QwaSpec

    @property
    def f(self) -> RunAggregator:
        return self.qwa.f

    @property
    def g(self) -> WordAggregator:
        return self.qwa.g

    @property
    def system(self) -> Wlts:
        return self.qwa.system

    @property
    def alphabet(self) -> typing.Tuple[str, ...]:
        return self.qwa.alphabet

    def dual(self) -> "QlaSpec":
        return QlaSpec(self.h.dual, self.qwa.dual())

    def __repr__(self) -> str:
        return f"<QlaSpec h={self.h.value} {self.qwa!r}>"


def dual_qla(spec: QlaSpec) -> QlaSpec:
    """ Swaps Inf/Sup and LimInf/LimSup on every level and negates the weights """
    return spec.dual()


def make_spec(
    system: Wlts,
    h: typing.Union[str, WordAggregator],
    g: typing.Union[str, WordAggregator],
    f: typing.Union[str, RunAggregator],
    discount: typing.Optional[Fraction] = None,
) -> QlaSpec:
    """ Builds a QlaSpec from aggregator names as they are written on the command line """
    try:
        return QlaSpec(
            WordAggregator(h), QwaSpec(RunAggregator(f), WordAggregator(g), system, discount)
        )
    except ValueError as e:
        raise InvalidSpecError(f"unknown aggregator: {e}")
