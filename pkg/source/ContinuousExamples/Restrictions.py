from typing import Optional, Sequence

import numpy as np

from source.CoreAlgebra import FiniteAlgebra
from source.ContinuousExamples.Implications import UnitImplication
from source.ErrorHandling import InvalidAlgebraError


def _restrict(impl: UnitImplication, values: np.ndarray, tolerance: float) -> np.ndarray:
    outputs = impl(values[:, None], values[None, :])
    distance = np.abs(outputs[:, :, None] - values[None, None, :])
    nearest = distance.argmin(axis=-1)
    closed = distance.min(axis=-1) <= tolerance
    if not closed.all():
        i, j = (int(k) for k in np.argwhere(~closed)[0])
        raise InvalidAlgebraError(
            f"{impl.name} leaves the chain at ({values[i]:g}, {values[j]:g})",
            f"value {outputs[i, j]:g} is not an element",
        )
    return nearest


def chain_restriction(double: Optional[UnitImplication], arrow: UnitImplication, values: Sequence[float],
                      labels: Optional[Sequence[str]] = None, tolerance: float = 1e-12) -> FiniteAlgebra:
    """
    Restricts unit implications to a finite chain containing 1. The chain must be closed
    under every given operation.
    """
    values = np.asarray(values, dtype=float)
    tops = np.flatnonzero(np.abs(values - 1.0) <= tolerance)
    if not tops.size:
        raise InvalidAlgebraError("chain does not contain 1")
    return FiniteAlgebra(
        size=len(values),
        top=int(tops[0]),
        arrow=_restrict(arrow, values, tolerance),
        double_arrow=None if double is None else _restrict(double, values, tolerance),
        labels=tuple(labels) if labels is not None else tuple(f"{v:g}" for v in values),
    )
