import os
import typing
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from qlatk.exception_factory import ConstructionLimitError, InvalidSpecError
from qlatk.modules import logger

from .value import parse_rational


@dataclass(frozen=True)
class Settings:
    """ Limits of the explicit constructions
    Documentation: docs/configuration.md
    """

    state_cap: int = 200000
    rank_complement_limit: int = 3
    oracle_state_limit: int = 8
    jobs: int = 1

    @classmethod
    def from_env(cls, environ: typing.Optional[typing.Mapping[str, str]] = None) -> "Settings":
        environ = os.environ if environ is None else environ
        values = {}
        for name, variable in ENVIRONMENT.items():
            if variable not in environ:
                continue
            value = parse_rational(environ[variable])
            if value.denominator != 1:
                raise InvalidSpecError(f"{variable} must be an integer, got {environ[variable]!r}")
            values[name] = int(value)
        return cls(**values)

    def check_size(self, size: int, what: str) -> None:
        """ Raises when a construction grows over the cap """
        if size > self.state_cap:
            raise ConstructionLimitError(
                f"{what} exceeds the state cap ({size} > {self.state_cap}), "
                f"raise QLATK_STATE_CAP to allow it"
            )
        elif size * 10 > self.state_cap * 9:
            logger.warning(f"{what} is close to the state cap ({size} of {self.state_cap})")


ENVIRONMENT = {
    "state_cap": "QLATK_STATE_CAP",
    "rank_complement_limit": "QLATK_RANK_LIMIT",
    "oracle_state_limit": "QLATK_ORACLE_LIMIT",
    "jobs": "QLATK_JOBS",
}

_settings: typing.Optional[Settings] = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def configure(settings: typing.Optional[Settings] = None, **changes) -> Settings:
    """ Replaces the active settings, either by a whole instance or field by field """
    global _settings
    _settings = replace(settings or get_settings(), **changes)
    return _settings


Item = typing.TypeVar("Item")
Result = typing.TypeVar("Result")


def parallel_map(
    function: typing.Callable[[Item], Result], items: typing.Iterable[Item]
) -> typing.List[Result]:
    """ Maps over a sweep with `jobs` worker threads, results keep the order of items """
    jobs = get_settings().jobs
    if jobs <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(function, items))
