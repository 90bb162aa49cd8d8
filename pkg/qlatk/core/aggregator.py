from enum import Enum


class RunAggregator(Enum):
    """ Aggregates the weight sequence of a run """

    INF = "inf"
    SUP = "sup"
    LIM_INF = "liminf"
    LIM_SUP = "limsup"
    LIM_INF_AVG = "liminfavg"
    LIM_SUP_AVG = "limsupavg"
    DSUM = "dsum"

    @property
    def dual(self) -> "RunAggregator":
        return _RUN_DUALS[self]

    @property
    def is_standard(self) -> bool:
        return self in (RunAggregator.INF, RunAggregator.SUP, *LIMIT_RUN_AGGREGATORS)

    @property
    def is_average(self) -> bool:
        return self in (RunAggregator.LIM_INF_AVG, RunAggregator.LIM_SUP_AVG)

    @property
    def is_limit(self) -> bool:
        return self in LIMIT_RUN_AGGREGATORS

    @property
    def is_prefix_independent(self) -> bool:
        return self.is_limit or self.is_average

    @property
    def family(self) -> str:
        """ One of std, avg, dsum; the routing table is written per family """
        if self.is_standard:
            return "std"
        elif self.is_average:
            return "avg"
        return "dsum"

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.value}>"


class WordAggregator(Enum):
    """ Aggregates a multiset of values: run values into a word value (g) or word values
    into a language value (h) """

    INF = "inf"
    SUP = "sup"
    LIM_INF = "liminf"
    LIM_SUP = "limsup"
    EXP = "exp"

    @property
    def dual(self) -> "WordAggregator":
        return _WORD_DUALS[self]

    @property
    def is_limit(self) -> bool:
        return self in (WordAggregator.LIM_INF, WordAggregator.LIM_SUP)

    @property
    def is_lattice(self) -> bool:
        return self is not WordAggregator.EXP

    @property
    def is_sup_like(self) -> bool:
        return self in (WordAggregator.SUP, WordAggregator.LIM_SUP)

    @property
    def plain(self) -> "WordAggregator":
        """ LimSup -> Sup, LimInf -> Inf, identity otherwise """
        return {
            WordAggregator.LIM_SUP: WordAggregator.SUP,
            WordAggregator.LIM_INF: WordAggregator.INF,
        }.get(self, self)

    @property
    def limit(self) -> "WordAggregator":
        """ Sup -> LimSup, Inf -> LimInf, identity otherwise """
        return {
            WordAggregator.SUP: WordAggregator.LIM_SUP,
            WordAggregator.INF: WordAggregator.LIM_INF,
        }.get(self, self)

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.value}>"


LanguageAggregator = WordAggregator

LIMIT_RUN_AGGREGATORS = (RunAggregator.LIM_INF, RunAggregator.LIM_SUP)

_RUN_DUALS = {
    RunAggregator.INF: RunAggregator.SUP,
    RunAggregator.SUP: RunAggregator.INF,
    RunAggregator.LIM_INF: RunAggregator.LIM_SUP,
    RunAggregator.LIM_SUP: RunAggregator.LIM_INF,
    RunAggregator.LIM_INF_AVG: RunAggregator.LIM_SUP_AVG,
    RunAggregator.LIM_SUP_AVG: RunAggregator.LIM_INF_AVG,
    RunAggregator.DSUM: RunAggregator.DSUM,
}

_WORD_DUALS = {
    WordAggregator.INF: WordAggregator.SUP,
    WordAggregator.SUP: WordAggregator.INF,
    WordAggregator.LIM_INF: WordAggregator.LIM_SUP,
    WordAggregator.LIM_SUP: WordAggregator.LIM_INF,
    WordAggregator.EXP: WordAggregator.EXP,
}
