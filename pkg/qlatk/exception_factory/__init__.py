from .abc import ABCExceptionFactory
from .code_error import CodeErrorFactory
from .errors import (
    AlphabetMismatchError,
    ConstructionLimitError,
    InvalidSpecError,
    InvalidSystemError,
    OracleLimitError,
    ParseError,
    ParseErrorFactory,
    QLATKError,
    SingularSystemError,
    UnknownLetterError,
    UnsupportedAggregationError,
)
from .single_error import SingleError
from .swear_handler import swear
