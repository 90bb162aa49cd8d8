import typing
from pathlib import Path

from qlatk.core.value import parse_rational
from qlatk.exception_factory import ParseError, QLATKError
from qlatk.modules import logger

T = typing.TypeVar("T")
Directive = typing.Callable[[typing.Any, typing.List[str]], None]


class FormatLoader(typing.Generic[T]):
    """ Line based reader of a text format. Every directive (first token of a line) is handled
    by a definition registered with the loader used as a decorator
    >>> qwa = FormatLoader("qwa", lambda: WltsBuilder([]), WltsBuilder.build)
    >>> @qwa("state")
    >>> def state(builder, args):
    >>>     builder.state(*args)
    """

    def __init__(
        self,
        name: str,
        builder_factory: typing.Callable[[], typing.Any],
        finish: typing.Callable[[typing.Any], T],
    ):
        self.name = name
        self.builder_factory = builder_factory
        self.finish = finish
        self.definitions: typing.Dict[str, Directive] = {}

    def __call__(self, directive: str) -> typing.Callable[[Directive], Directive]:
        def decorator(func: Directive) -> Directive:
            self.definitions[directive] = func
            return func

        return decorator

    def loads(self, text: str) -> T:
        builder = self.builder_factory()
        for number, raw in enumerate(text.splitlines(), start=1):
            tokens = raw.split("#", 1)[0].split()
            if not tokens:
                continue
            directive, args = tokens[0], tokens[1:]
            if directive not in self.definitions:
                raise ParseError(number, f"unknown {self.name} directive {directive!r}")
            try:
                self.definitions[directive](builder, args)
            except ParseError() as e:  # type: ignore
                raise ParseError(number, e.error_description)
            except (QLATKError, ValueError) as e:
                raise ParseError(number, str(e))
        result = self.finish(builder)
        logger.debug(f"Loaded {self.name} document: {result!r}")
        return result

    def load(self, path: typing.Union[str, Path]) -> T:
        return self.loads(Path(path).read_text(encoding="utf-8"))

    def __repr__(self) -> str:
        return f"<FormatLoader {self.name} directives={sorted(self.definitions)}>"


def expect(args: typing.List[str], *sizes: int) -> None:
    if len(args) not in sizes:
        expected = " or ".join(str(size) for size in sizes)
        raise QLATKError(f"expected {expected} arguments, got {len(args)}")


def state_names(states: typing.Sequence[typing.Hashable]) -> typing.Dict[typing.Hashable, str]:
    """ File tokens for states: plain names stay, constructed states are numbered """
    if all(isinstance(s, str) and _is_token(s) for s in states):
        return {state: typing.cast(str, state) for state in states}
    return {state: f"q{i}" for i, state in enumerate(states)}


def _is_token(name: str) -> bool:
    return bool(name) and not any(c.isspace() or c == "#" for c in name)
