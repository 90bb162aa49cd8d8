import typing
from pathlib import Path

from qlatk.exception_factory import QLATKError

from .base import FormatLoader
from .buchi import ba, dump_buchi
from .markov import dump_markov, mc
from .qwa import dump_qwa, qwa

LOADERS: typing.Dict[str, FormatLoader] = {".qwa": qwa, ".ba": ba, ".mc": mc}


def load(path: typing.Union[str, Path]) -> typing.Any:
    """ Loads a system, automaton or chain picking the format by the file suffix """
    suffix = Path(path).suffix
    if suffix not in LOADERS:
        raise QLATKError(f"unknown file format {suffix!r}, expected one of {sorted(LOADERS)}")
    return LOADERS[suffix].load(path)


load_qwa = qwa.load
load_buchi = ba.load
load_markov = mc.load
loads_qwa = qwa.loads
loads_buchi = ba.loads
loads_markov = mc.loads
