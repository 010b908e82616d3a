from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable

import numpy as np

from source.ErrorHandling import UnknownSystemError

# x <= y up to rounding of computed values such as 1-x
ORDER_SLACK = 1e-12


@dataclass(frozen=True)
class UnitImplication:
    """A real implication on [0,1]², vectorised over numpy arrays."""
    name: str
    title: str
    formula: str
    function: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return np.asarray(self.function(x, y), dtype=float)


def _lukasiewicz(x, y):
    return np.minimum(1.0, 1.0 - x + y)


def _reichenbach(x, y):
    return 1.0 - x + x * y


def _godel(x, y):
    return np.where(x <= y + ORDER_SLACK, 1.0, y)


def _fodor(x, y):
    return np.where(x <= y + ORDER_SLACK, 1.0, np.maximum(1.0 - x, y))


def _yager(x, y):
    # 0^0 is taken as 1 only at x = y = 0
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where((x == 0) & (y == 0), 1.0, np.power(y, x))


def _weber(x, y):
    return np.where(x < 1, 1.0, y)


LK = UnitImplication("LK", "Łukasiewicz", "min(1, 1-x+y)", _lukasiewicz)
R = UnitImplication("R", "Reichenbach", "1-x+xy", _reichenbach)
GD = UnitImplication("GD", "Gödel", "1 if x<=y else y", _godel)
FD = UnitImplication("FD", "Fodor", "1 if x<=y else max(1-x, y)", _fodor)
YG = UnitImplication("YG", "Yager", "1 if x=y=0 else y^x", _yager)
WB = UnitImplication("WB", "Weber", "1 if x<1 else y", _weber)

IMPLICATIONS = MappingProxyType({impl.name: impl for impl in (LK, R, GD, FD, YG, WB)})


def get_implication(name: str) -> UnitImplication:
    try:
        return IMPLICATIONS[name.upper()]
    except KeyError:
        raise UnknownSystemError(name, IMPLICATIONS.keys())
