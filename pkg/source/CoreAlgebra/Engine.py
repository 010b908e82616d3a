"""
Axiom engine
------------
An axiom is a law: a vectorised predicate over one to five variables, written against an
evaluation context. The context supplies the operations (arrow, double, meet), the notion
of equality and the variable grids, so one law serves finite tables, sampled unit-square
implications and the plane example alike.

Quantification is exhaustive over the context's points. The witness of a failing law is
the lexicographically first failing point in C order, which makes reports deterministic.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Tuple

import numpy as np

from source.CoreAlgebra.Structures import AxiomReport, FiniteAlgebra, Verdict
from source.ErrorHandling import SizeCapExceeded

MAX_CHECK_SIZE = 16


@dataclass(frozen=True)
class Axiom:
    name: str
    arity: int
    law: Callable[..., np.ndarray]
    statement: str = ""


@lru_cache(maxsize=64)
def index_grid(points: int, arity: int) -> Tuple[np.ndarray, ...]:
    grids = np.indices((points,) * arity, dtype=np.intp)
    for grid in grids:
        grid.setflags(write=False)
    return tuple(grids)


class AxiomContext:
    """
    Operations and points an axiom is evaluated against. Subclasses fill in the operations.
    """
    top = None

    def arrow(self, x, y):
        raise NotImplementedError

    def double(self, x, y):
        raise NotImplementedError

    def meet(self, x, y):
        raise NotImplementedError("meet is not available in this context")

    def eq(self, u, v):
        raise NotImplementedError

    def is_top(self, u):
        return self.eq(u, self.top)

    def le(self, x, y):
        return self.is_top(self.arrow(x, y))

    def ll(self, x, y):
        return self.is_top(self.double(x, y))

    def same(self, x, y):
        """Equality of two quantified variables."""
        return self.eq(x, y)

    def points(self, arity: int) -> int:
        raise NotImplementedError

    def variables(self, arity: int) -> Tuple:
        raise NotImplementedError

    def witness(self, arity: int, index: Sequence[int]) -> Tuple:
        raise NotImplementedError

    def arguments(self, witness: Sequence) -> Tuple:
        """Inverse of witness: turns a reported point back into law arguments."""
        raise NotImplementedError


class FiniteContext(AxiomContext):
    def __init__(self, alg: FiniteAlgebra, meet: Optional[np.ndarray] = None, max_size: int = MAX_CHECK_SIZE):
        if alg.size > max_size:
            raise SizeCapExceeded("checker", alg.size, max_size)
        self.alg = alg
        self.size = alg.size
        self.top = alg.top
        self._arrow = alg.arrow
        self._double = alg.double
        self._meet = meet

    def arrow(self, x, y):
        return self._arrow[x, y]

    def double(self, x, y):
        return self._double[x, y]

    def meet(self, x, y):
        if self._meet is None:
            return super().meet(x, y)
        return self._meet[x, y]

    def eq(self, u, v):
        return np.equal(u, v)

    def points(self, arity: int) -> int:
        return self.size

    def variables(self, arity: int) -> Tuple:
        return index_grid(self.size, arity)

    def witness(self, arity: int, index: Sequence[int]) -> Tuple[int, ...]:
        return tuple(int(i) for i in index)

    def arguments(self, witness: Sequence) -> Tuple:
        return tuple(np.intp(w) for w in witness)


def evaluate(ctx: AxiomContext, axiom: Axiom, expected: bool = True) -> Verdict:
    args = ctx.variables(axiom.arity)
    shape = (ctx.points(axiom.arity),) * axiom.arity
    holds = np.broadcast_to(np.asarray(axiom.law(ctx, *args), dtype=bool), shape)
    if holds.all():
        return Verdict(axiom.name, True, (), expected)
    first = np.unravel_index(int(np.argmin(holds)), shape)
    return Verdict(axiom.name, False, ctx.witness(axiom.arity, first), expected)


def holds_at(ctx: AxiomContext, axiom: Axiom, witness: Sequence) -> bool:
    """Re-evaluate one law at one point."""
    return bool(np.all(axiom.law(ctx, *ctx.arguments(witness))))


def run_axioms(system: str, ctx: AxiomContext, axioms: Iterable[Axiom], mode: str = "exhaustive") -> AxiomReport:
    return AxiomReport(system, [evaluate(ctx, axiom) for axiom in axioms], mode=mode)


def implies(premise, conclusion):
    return np.logical_or(np.logical_not(premise), conclusion)


def iff(left, right):
    return np.equal(np.asarray(left, dtype=bool), np.asarray(right, dtype=bool))


def exists(points: int, like, predicate):
    """
    Existential over a fresh variable ranging over finite indices 0..points-1.
    The fresh variable gets a leading axis; the result drops it.
    """
    fresh = np.arange(points).reshape((points,) + (1,) * np.ndim(like))
    return np.any(predicate(fresh), axis=0)
