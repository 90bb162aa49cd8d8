import typing

from .code_error import CodeErrorFactory
from .single_error import SingleError


class QLATKError(SingleError):
    pass


class ParseErrorFactory(CodeErrorFactory):
    """ Errors of the text formats, the code is the line number (0 for whole-input errors) """


ParseError = ParseErrorFactory()


class AlphabetMismatchError(QLATKError):
    pass


class UnknownLetterError(QLATKError):
    pass


class InvalidSpecError(QLATKError):
    pass


class InvalidSystemError(QLATKError):
    def __init__(self, description: str, violations: typing.Sequence[typing.Any] = ()):
        super().__init__(description)
        self.violations = list(violations)


class SingularSystemError(QLATKError):
    pass


class ConstructionLimitError(QLATKError):
    pass


class UnsupportedAggregationError(QLATKError):
    pass


class OracleLimitError(QLATKError):
    pass
