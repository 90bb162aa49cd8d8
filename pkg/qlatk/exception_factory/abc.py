import typing
from abc import ABC, abstractmethod


class ABCExceptionFactory(ABC, BaseException):
    """ Base of the qlatk error factories. Calling a factory either builds an error to raise
    or returns the error type to catch, so `raise ParseError(3, "...")` and
    `except ParseError(3)` name the same input line
    Documentation: docs/low-level/exception_factory/exception-factory.md
    """

    @classmethod
    @abstractmethod
    def __call__(
        cls, *args, **kwargs
    ) -> typing.Union["ABCExceptionFactory", typing.Type["ABCExceptionFactory"]]:
        pass

    @classmethod
    @abstractmethod
    def exception_to_raise(cls, *args, **kwargs) -> "ABCExceptionFactory":
        """ Error instance carrying the description of a rejected input or computation """

    @classmethod
    @abstractmethod
    def exception_to_handle(cls, *args, **kwargs) -> typing.Type["ABCExceptionFactory"]:
        """ Error type matching the raised instances, for `except` clauses """

    @classmethod
    @abstractmethod
    def generate_exc_classname(cls, *args, **kwargs) -> str:
        pass
