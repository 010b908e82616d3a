from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

import numpy as np

from source.CoreAlgebra import FiniteAlgebra, RelationMatrix, derive_relation
from source.ErrorHandling import CoreException, NotAPartialOrderError

# every interval of a 16-element chain
MAX_INTERVAL_SIZE = 136


@dataclass(frozen=True, order=True)
class IntervalElement:
    lo: int
    hi: int

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi


def embed_degenerate(a: int) -> IntervalElement:
    return IntervalElement(a, a)


def build_interval_carrier(base: FiniteAlgebra) -> List[IntervalElement]:
    """All [a, b] with a ⪯ b, lexicographic in (a, b)."""
    order = derive_relation(base, "arrow")
    if not order.is_partial_order:
        raise NotAPartialOrderError("build_interval_carrier", order.failing_flags())
    return [IntervalElement(lo, hi) for lo in range(base.size) for hi in range(base.size) if order.rel[lo, hi]]


@dataclass(frozen=True, eq=False)
class IntervalSpace:
    """
    Interval carrier over a base algebra with endpoint arrays and the two interval orders.
    """
    base: FiniteAlgebra
    order: RelationMatrix
    carrier: Tuple[IntervalElement, ...]

    @classmethod
    def over(cls, base: FiniteAlgebra) -> "IntervalSpace":
        carrier = tuple(build_interval_carrier(base))
        return cls(base, derive_relation(base, "arrow"), carrier)

    @property
    def size(self) -> int:
        return len(self.carrier)

    @cached_property
    def lo(self) -> np.ndarray:
        return np.array([x.lo for x in self.carrier], dtype=np.intp)

    @cached_property
    def hi(self) -> np.ndarray:
        return np.array([x.hi for x in self.carrier], dtype=np.intp)

    @cached_property
    def index(self) -> np.ndarray:
        """index[a, b] is the position of [a, b], -1 when a ⋠ b."""
        table = np.full((self.base.size, self.base.size), -1, dtype=np.intp)
        table[self.lo, self.hi] = np.arange(self.size)
        return table

    @cached_property
    def degenerate(self) -> np.ndarray:
        return self.lo == self.hi

    @property
    def top(self) -> int:
        return self.index_of(self.base.top, self.base.top)

    @cached_property
    def km_order(self) -> RelationMatrix:
        le = self.order.rel
        return RelationMatrix(self.size, le[self.lo[:, None], self.lo[None, :]] & le[self.hi[:, None], self.hi[None, :]])

    @cached_property
    def wb_order(self) -> RelationMatrix:
        return RelationMatrix(self.size, self.order.rel[self.hi[:, None], self.lo[None, :]])

    @cached_property
    def membership(self) -> np.ndarray:
        """membership[X, x]: X̲ ⪯ x ⪯ X̄."""
        le = self.order.rel
        return le[self.lo] & le[:, self.hi].T

    def index_of(self, lo: int, hi: int) -> int:
        position = int(self.index[lo, hi])
        if position < 0:
            raise CoreException("IntervalSpace.index_of", f"[{lo}, {hi}] is not an interval")
        return position

    def embed(self, a: int) -> int:
        return self.index_of(a, a)

    def label(self, position: int) -> str:
        element = self.carrier[position]
        return f"[{self.base.label(element.lo)},{self.base.label(element.hi)}]"

    def labels(self) -> Tuple[str, ...]:
        return tuple(self.label(i) for i in range(self.size))

    def intervals(self, lo_table: np.ndarray, hi_table: np.ndarray, where: str) -> np.ndarray:
        """Endpoint tables to interval indices; every pair must be a valid interval."""
        table = self.index[lo_table, hi_table]
        if (table < 0).any():
            bad = tuple(int(i) for i in np.argwhere(table < 0)[0])
            raise CoreException(where, f"output at {bad} is not an interval", fatal=True)
        table = table.astype(np.intp)
        table.setflags(write=False)
        return table
