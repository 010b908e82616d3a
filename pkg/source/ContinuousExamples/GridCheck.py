"""
Sampled checking on [0,1]
-------------------------
Laws written for finite tables are evaluated here over an evenly spaced grid of the unit
interval. Equality is |u - v| <= tolerance and "equals ⊤" is |v - 1| <= tolerance. A law
that holds at every grid point is a sampled pass, not a proof.
"""
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from source.CoreAlgebra import (
    Axiom, AxiomContext, AxiomReport, PBCI_AXIOMS, SBCI_AXIOMS, SBCI_DERIVED, Verdict, evaluate, holds_at,
)
from source.CoreAlgebra.Engine import implies, index_grid
from source.ContinuousExamples.Implications import UnitImplication
from source.ErrorHandling import GridSpecError, UnknownSystemError

GRID_SYSTEMS = MappingProxyType({
    "sbci": SBCI_AXIOMS,
    "sbci-derived": SBCI_DERIVED,
    "pbci": PBCI_AXIOMS,
})


@dataclass(frozen=True)
class GridSpec:
    resolution: int = 101
    tolerance: float = 1e-9

    def __post_init__(self):
        if int(self.resolution) != self.resolution or self.resolution < 2:
            raise GridSpecError("GridSpec", f"resolution {self.resolution} is below 2")
        if not self.tolerance > 0:
            raise GridSpecError("GridSpec", f"tolerance {self.tolerance} is not positive")

    @cached_property
    def values(self) -> np.ndarray:
        values = np.linspace(0.0, 1.0, int(self.resolution))
        values.setflags(write=False)
        return values


class GridContext(AxiomContext):
    top = 1.0

    def __init__(self, double: UnitImplication, arrow: UnitImplication, grid: GridSpec):
        self._double_impl = double
        self._arrow_impl = arrow
        self.grid = grid
        self.tolerance = grid.tolerance

    def arrow(self, x, y):
        return self._arrow_impl(x, y)

    def double(self, x, y):
        return self._double_impl(x, y)

    def meet(self, x, y):
        return np.minimum(x, y)

    def eq(self, u, v):
        return np.abs(np.asarray(u) - np.asarray(v)) <= self.tolerance

    def points(self, arity: int) -> int:
        return self.grid.resolution

    def variables(self, arity: int) -> Tuple:
        return tuple(self.grid.values[grid] for grid in index_grid(self.grid.resolution, arity))

    def witness(self, arity: int, index: Sequence[int]) -> Tuple[float, ...]:
        return tuple(float(self.grid.values[i]) for i in index)

    def arguments(self, witness: Sequence) -> Tuple:
        return tuple(np.float64(w) for w in witness)


def grid_axioms(names: Iterable[str]) -> Tuple[Axiom, ...]:
    """Axioms by system name ("sbci", "pbci", ...) or single axiom name ("PB-2")."""
    by_name = {axiom.name: axiom for system in GRID_SYSTEMS.values() for axiom in system}
    chosen = []
    for name in names:
        if name.lower() in GRID_SYSTEMS:
            chosen.extend(GRID_SYSTEMS[name.lower()])
        elif name in by_name:
            chosen.append(by_name[name])
        else:
            raise UnknownSystemError(name, list(GRID_SYSTEMS) + list(by_name))
    return tuple(chosen)


def grid_check(double: UnitImplication, arrow: UnitImplication, axioms: Iterable[Axiom],
               grid: Optional[GridSpec] = None, negative: Iterable[Axiom] = ()) -> AxiomReport:
    """`negative` axioms are claimed to fail and count as conforming when they do."""
    grid = grid or GridSpec()
    ctx = GridContext(double, arrow, grid)
    verdicts = [evaluate(ctx, axiom) for axiom in axioms]
    verdicts.extend(evaluate(ctx, axiom, expected=False) for axiom in negative)
    report = AxiomReport(f"{double.name}/{arrow.name}", verdicts, mode="sampled")
    report.facts["resolution"] = grid.resolution
    report.facts["tolerance"] = grid.tolerance
    return report


ORDER_PROPERTY: Tuple[Axiom, ...] = (
    Axiom("order-forward", 2, lambda c, x, y: implies(x <= y, c.le(x, y)), "x <= y implies x→y = 1"),
    Axiom("order-backward", 2, lambda c, x, y: implies(c.le(x, y), x <= y), "x→y = 1 implies x <= y"),
)


def order_property_check(impl: UnitImplication, grid: Optional[GridSpec] = None) -> AxiomReport:
    grid = grid or GridSpec()
    ctx = GridContext(impl, impl, grid)
    return AxiomReport(f"order-property:{impl.name}", [evaluate(ctx, axiom) for axiom in ORDER_PROPERTY],
                       mode="sampled")


def probe(ctx: AxiomContext, axiom: Axiom, point: Sequence,
          sides: Optional[Callable[..., Dict[str, float]]] = None) -> Verdict:
    """One law at one explicit point; `sides` names the quantities to report with it."""
    values = None
    if sides is not None:
        values = {key: float(value) for key, value in sides(ctx, *ctx.arguments(point)).items()}
    return Verdict(axiom.name, holds_at(ctx, axiom, point), tuple(point), values=values)
