import typing

from .abc import ABCExceptionFactory


class SingleError(ABCExceptionFactory):
    """ Errors without a code. QLATKError derives from it and every library error
    (alphabet mismatches, invalid systems, refused aggregations, construction limits)
    derives from QLATKError, so one `except QLATKError` catches them all
    Documentation: docs/low-level/exception_factory/exception-factory.md
    """

    @classmethod
    def __call__(cls, exception_description: str) -> "ABCExceptionFactory":  # type: ignore
        return cls.exception_to_raise(exception_description)

    @classmethod
    def exception_to_raise(  # type: ignore
        cls, exception_description: str
    ) -> "ABCExceptionFactory":
        return cls(exception_description)

    @classmethod
    def exception_to_handle(  # type: ignore
        cls, code: typing.Optional[int] = None
    ) -> typing.Type["ABCExceptionFactory"]:
        """ The code is ignored, the error type is the class itself """
        return cls

    @classmethod
    def generate_exc_classname(cls) -> str:  # type: ignore
        return cls.__name__
