"""
Interval algebras
-----------------
Builds the interval operations over a finite base BCI-algebra. With X = [X̲, X̄]:

    X ⇒> Y = [X̄→Y̲, X̲→Ȳ]                     (best)
    X ⇒  Y = [(X̲→Y̲)∧(X̄→Ȳ), X̲→Ȳ]             (km)
    X ⟾  Y = [(X̲→Y̲)∧(X̄→Ȳ), X̄→Ȳ]             (mapsto)

⇒> and ⇒ together form the IBCI-algebra; ⟾ alone is a BCI-algebra but no representation
of →. Every table entry is checked to be a valid interval at build time.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Tuple

import numpy as np

from source.CoreAlgebra import (
    FiniteAlgebra, MeetStructure, RelationMatrix, check_bci, check_condition_star, compute_meet,
    derive_relation, first_failure, meet_of, CHECKERS,
)
from source.ErrorHandling import CoreException, NotAPartialOrderError, PreconditionViolation
from source.Intervalization.Carrier import MAX_INTERVAL_SIZE, IntervalElement, IntervalSpace


@dataclass(frozen=True, eq=False)
class IntervalOperation:
    name: str
    space: IntervalSpace
    table: np.ndarray

    def __call__(self, x, y):
        return self.table[x, y]

    def value(self, x: int, y: int) -> IntervalElement:
        return self.space.carrier[int(self.table[x, y])]


def _gate(where: str, base: FiniteAlgebra, gates: Iterable[str]) -> MeetStructure:
    """Runs the named preconditions in order, raising on the first that fails."""
    meet: Optional[MeetStructure] = None
    for gate in gates:
        if gate == "bci":
            report = check_bci(base)
            if not report.passed:
                failure = first_failure(report)
                raise PreconditionViolation(where, gate, f"{failure.axiom} fails at {failure.witness}")
        elif gate == "meet":
            try:
                meet = compute_meet(derive_relation(base, "arrow"))
            except NotAPartialOrderError as e:
                raise PreconditionViolation(where, gate, e.summary)
            if not meet.present:
                raise PreconditionViolation(where, gate, f"no meet for {meet.witness}")
        else:
            report = CHECKERS[gate](base)
            if not report.passed:
                failure = first_failure(report)
                raise PreconditionViolation(where, gate, f"{failure.axiom} fails at {failure.witness}")
    return meet


def _endpoints(space: IntervalSpace):
    lo, hi = space.lo, space.hi
    return lo[:, None], hi[:, None], lo[None, :], hi[None, :]


def best_operation(space: IntervalSpace) -> IntervalOperation:
    a = space.base.arrow
    lx, hx, ly, hy = _endpoints(space)
    return IntervalOperation("best", space, space.intervals(a[hx, ly], a[lx, hy], "best"))


def km_operation(space: IntervalSpace, meet: np.ndarray) -> IntervalOperation:
    a = space.base.arrow
    lx, hx, ly, hy = _endpoints(space)
    return IntervalOperation("km", space, space.intervals(meet[a[lx, ly], a[hx, hy]], a[lx, hy], "km"))


def mapsto_operation(space: IntervalSpace, meet: np.ndarray) -> IntervalOperation:
    a = space.base.arrow
    lx, hx, ly, hy = _endpoints(space)
    return IntervalOperation("mapsto", space, space.intervals(meet[a[lx, ly], a[hx, hy]], a[hx, hy], "mapsto"))


def widen_to_top(op: IntervalOperation) -> IntervalOperation:
    """Upper endpoint raised to ⊤ wherever the result is still an interval."""
    space = op.space
    lows = space.lo[op.table]
    widened = space.index[lows, space.base.top]
    table = np.where(widened >= 0, widened, op.table).astype(np.intp)
    table.setflags(write=False)
    return IntervalOperation(f"{op.name}-widened", space, table)


@dataclass(frozen=True, eq=False)
class IntervalAlgebra:
    base: FiniteAlgebra
    meet: MeetStructure
    space: IntervalSpace
    best: IntervalOperation
    km: IntervalOperation

    @property
    def order(self) -> RelationMatrix:
        return self.space.order

    @property
    def carrier(self) -> Tuple[IntervalElement, ...]:
        return self.space.carrier

    @property
    def size(self) -> int:
        return self.space.size

    @property
    def top(self) -> int:
        return self.space.top

    @property
    def best_table(self) -> np.ndarray:
        return self.best.table

    @property
    def km_table(self) -> np.ndarray:
        return self.km.table

    @property
    def km_order(self) -> RelationMatrix:
        return self.space.km_order

    @property
    def wb_order(self) -> RelationMatrix:
        return self.space.wb_order

    @cached_property
    def mapsto(self) -> IntervalOperation:
        return mapsto_operation(self.space, self.meet.require("IntervalAlgebra.mapsto"))

    def operation(self, name: str) -> IntervalOperation:
        if name == "best":
            return self.best
        if name == "km":
            return self.km
        if name == "mapsto":
            return self.mapsto
        raise ValueError(f"Unknown interval operation {name}")


def intervalize(base: FiniteAlgebra) -> IntervalAlgebra:
    meet = _gate("intervalize", base, ("bci", "meet", "distributivity"))
    space = IntervalSpace.over(base)
    return IntervalAlgebra(base, meet, space, best_operation(space), km_operation(space, meet.meet))


def ibci_as_sbci(ia: IntervalAlgebra) -> FiniteAlgebra:
    """↠ := ⇒> and → := ⇒ over the interval carrier."""
    return FiniteAlgebra(
        size=ia.size, top=ia.top, arrow=ia.km_table, double_arrow=ia.best_table, labels=ia.space.labels(),
    )


def mapsto_construct(base: FiniteAlgebra) -> FiniteAlgebra:
    meet = _gate("mapsto_construct", base, ("bci", "meet", "condition-star"))
    space = IntervalSpace.over(base)
    op = mapsto_operation(space, meet.meet)
    result = FiniteAlgebra(size=space.size, top=space.top, arrow=op.table, labels=space.labels())
    if not check_bci(result, max_size=MAX_INTERVAL_SIZE).passed:
        raise CoreException("mapsto_construct", "result fails bci", fatal=True)
    result_meet = meet_of(result)
    if not result_meet.present or not check_condition_star(result, result_meet, max_size=MAX_INTERVAL_SIZE).passed:
        raise CoreException("mapsto_construct", "result fails condition-star", fatal=True)
    return result
