"""
Model search
============

Depth-first enumeration of operation tables over {0..n-1}, one top element at a time.

Cells are filled row-major, the arrow table first and then the double arrow table, with
values in ascending order, so models for one top come out in the order of
FiniteAlgebra.sort_key.

Pruning only ever uses consequences of the required systems:
  - forced cells: x→x = ⊤, ⊤→x = x, x→⊤ = ⊤ and their double arrow counterparts,
    depending on which systems are required
  - antisymmetry of the derived relation, checked whenever a mirrored pair is complete
  - every law of a required system, evaluated at the points whose lookups are all
    assigned, each time a table row is completed

Every leaf is re-checked with the full checkers, so pruning never decides membership.
"""
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from source.CoreAlgebra import (
    Axiom, AxiomContext, BCI_AXIOMS, BCK_AXIOM, FiniteAlgebra, IMPLICATIVE_AXIOMS, PBCI_AXIOMS, PROPERTIES_A,
    SBCI_AXIOMS, SBCI_DERIVED, SBCK_AXIOM, all_pass,
)
from source.CoreAlgebra.Engine import index_grid
from source.CoreAlgebra.Registry import TWO_OPERATION_SYSTEMS, validate_systems
from source.ErrorHandling import PreconditionViolation, SizeCapExceeded

MAX_SINGLE_SIZE = 5
MAX_DOUBLE_SIZE = 4

UNSET = -1

FORCING: Dict[str, Tuple[Tuple[str, str], ...]] = {
    "bci": (("arrow", "diagonal"), ("arrow", "top-row"), ("arrow", "antisymmetric")),
    "bck": (("arrow", "top-column"),),
    "properties-a": (("arrow", "top-row"),),
    "implicative": (("arrow", "diagonal"), ("arrow", "antisymmetric")),
    "sbci": (("arrow", "diagonal"), ("arrow", "antisymmetric"), ("double", "top-row"), ("double", "antisymmetric")),
    "sbci-derived": (("arrow", "diagonal"), ("double", "antisymmetric")),
    "sbck": (("double", "top-column"),),
    "pbci": (("arrow", "diagonal"), ("arrow", "antisymmetric"), ("double", "diagonal"), ("double", "antisymmetric")),
}

PARTIAL_LAWS: Dict[str, Tuple[Axiom, ...]] = {
    "bci": BCI_AXIOMS,
    "bck": (BCK_AXIOM,),
    "properties-a": PROPERTIES_A,
    "implicative": IMPLICATIVE_AXIOMS,
    "sbci": SBCI_AXIOMS,
    "sbci-derived": SBCI_DERIVED,
    "sbck": (SBCK_AXIOM,),
    "pbci": PBCI_AXIOMS,
}


@dataclass(frozen=True)
class SearchTask:
    size: int
    require: Tuple[str, ...]
    forbid: Tuple[str, ...] = ()
    limit: int = 0
    top: Optional[int] = None
    max_single: int = MAX_SINGLE_SIZE
    max_double: int = MAX_DOUBLE_SIZE

    def __post_init__(self):
        object.__setattr__(self, "require", tuple(self.require))
        object.__setattr__(self, "forbid", tuple(self.forbid))
        if not self.require:
            raise PreconditionViolation("SearchTask", "require", "at least one required system")
        validate_systems(self.require + self.forbid)
        if self.size < 1:
            raise PreconditionViolation("SearchTask", "size", f"size {self.size} is not positive")
        if self.size > self.cap:
            raise SizeCapExceeded("SearchTask", self.size, self.cap)
        if self.top is not None and not 0 <= self.top < self.size:
            raise PreconditionViolation("SearchTask", "top", f"top {self.top} is out of range")
        if self.limit < 0:
            raise PreconditionViolation("SearchTask", "limit", "limit is negative")

    @property
    def two_operation(self) -> bool:
        return any(name in TWO_OPERATION_SYSTEMS for name in self.require + self.forbid)

    @property
    def cap(self) -> int:
        return self.max_double if self.two_operation else self.max_single

    @property
    def tops(self) -> Tuple[int, ...]:
        return (self.top,) if self.top is not None else tuple(range(self.size))

    def accepts(self, alg: FiniteAlgebra) -> bool:
        if not all_pass(alg, self.require):
            return False
        return not self.forbid or not all_pass(alg, self.forbid)


@dataclass
class SearchResult:
    models: List[FiniteAlgebra] = field(default_factory=list)
    count: int = 0
    pruned: int = 0
    checked: int = 0
    exhaustive: bool = True


class PartialContext(AxiomContext):
    """
    Tables with unassigned cells. Every lookup marks the points that touched an unassigned
    cell, and only the remaining points may count as failures.
    """

    def __init__(self, size: int, top: int, arrow: np.ndarray, double: np.ndarray):
        self.size = size
        self.top = top
        self._arrow = arrow
        self._double = double
        self.unknown = None

    def _lookup(self, table, x, y):
        x, y = np.broadcast_arrays(np.asarray(x), np.asarray(y))
        missing = (x < 0) | (y < 0)
        value = np.where(missing, UNSET, table[np.where(missing, 0, x), np.where(missing, 0, y)])
        self.unknown = self.unknown | (value < 0)
        return value

    def arrow(self, x, y):
        return self._lookup(self._arrow, x, y)

    def double(self, x, y):
        return self._lookup(self._double, x, y)

    def eq(self, u, v):
        return np.equal(u, v)

    def points(self, arity: int) -> int:
        return self.size

    def variables(self, arity: int) -> Tuple:
        return index_grid(self.size, arity)

    def violated(self, axiom: Axiom) -> bool:
        shape = (self.size,) * axiom.arity
        self.unknown = np.zeros(shape, dtype=bool)
        holds = np.broadcast_to(np.asarray(axiom.law(self, *self.variables(axiom.arity)), dtype=bool), shape)
        return bool(np.any(~holds & ~self.unknown))


class _Search:
    def __init__(self, task: SearchTask, top: int, prune: bool = True):
        self.task = task
        self.top = top
        self.prune = prune
        n = task.size
        self.names = ("arrow", "double") if task.two_operation else ("arrow",)
        self.tables = {name: np.full((n, n), UNSET, dtype=np.intp) for name in self.names}
        self.antisymmetric = set()
        self.laws: Tuple[Axiom, ...] = ()
        self.result = SearchResult()
        self.stopped = False

    def _force(self) -> bool:
        """Writes the forced cells; False when two rules disagree on a cell."""
        if not self.prune:
            return True
        n, t = self.task.size, self.top
        laws = []
        for system in self.task.require:
            laws.extend(PARTIAL_LAWS.get(system, ()))
            for which, rule in FORCING.get(system, ()):
                if which not in self.tables:
                    continue
                if rule == "antisymmetric":
                    self.antisymmetric.add(which)
                    continue
                if rule == "diagonal":
                    cells = [((x, x), t) for x in range(n)]
                elif rule == "top-row":
                    cells = [((t, x), x) for x in range(n)]
                else:
                    cells = [((x, t), t) for x in range(n)]
                table = self.tables[which]
                for (i, j), value in cells:
                    if table[i, j] not in (UNSET, value):
                        return False
                    table[i, j] = value
        self.laws = tuple(laws)
        return True

    def _context(self) -> PartialContext:
        arrow = self.tables["arrow"]
        return PartialContext(self.task.size, self.top, arrow, self.tables.get("double", arrow))

    def _laws_hold(self) -> bool:
        ctx = self._context()
        return not any(ctx.violated(axiom) for axiom in self.laws)

    def _antisymmetry_holds(self, which: str, i: int, j: int) -> bool:
        if which not in self.antisymmetric or i == j:
            return True
        table = self.tables[which]
        return not (table[i, j] == self.top and table[j, i] == self.top)

    def _leaf(self):
        arrow = self.tables["arrow"].copy()
        double = self.tables["double"].copy() if "double" in self.tables else None
        alg = FiniteAlgebra(size=self.task.size, top=self.top, arrow=arrow, double_arrow=double)
        self.result.checked += 1
        if self.task.accepts(alg):
            self.result.count += 1
            self.result.models.append(alg)
            if self.task.limit and self.result.count >= self.task.limit:
                self.stopped = True
                self.result.exhaustive = False

    def run(self) -> SearchResult:
        if not self._force():
            return self.result
        if self.prune and self.laws and not self._laws_hold():
            self.result.pruned += 1
            return self.result
        free = [(which, i, j) for which in self.names
                for i, j in itertools.product(range(self.task.size), repeat=2)
                if self.tables[which][i, j] == UNSET]
        row_done = set()
        for position, (which, i, _) in enumerate(free):
            if position + 1 == len(free) or free[position + 1][:2] != (which, i):
                row_done.add(position)
        self._descend(free, 0, row_done)
        return self.result

    def _descend(self, free: Sequence[Tuple[str, int, int]], position: int, row_done):
        if self.stopped:
            return
        if position == len(free):
            self._leaf()
            return
        which, i, j = free[position]
        table = self.tables[which]
        for value in range(self.task.size):
            table[i, j] = value
            if self.prune and not self._antisymmetry_holds(which, i, j):
                self.result.pruned += 1
                continue
            if self.prune and position in row_done and self.laws and not self._laws_hold():
                self.result.pruned += 1
                continue
            self._descend(free, position + 1, row_done)
            if self.stopped:
                break
        table[i, j] = UNSET


def search_top(task: SearchTask, top: int, prune: bool = True) -> SearchResult:
    return _Search(task, top, prune).run()


def merge_results(task: SearchTask, results: Iterable[SearchResult]) -> SearchResult:
    """Order-independent merge; with a limit, keeps the first models in sort order."""
    merged = SearchResult()
    for result in results:
        merged.models.extend(result.models)
        merged.count += result.count
        merged.pruned += result.pruned
        merged.checked += result.checked
        merged.exhaustive = merged.exhaustive and result.exhaustive
    merged.models.sort(key=FiniteAlgebra.sort_key)
    if task.limit and merged.count >= task.limit:
        merged.models = merged.models[:task.limit]
        merged.count = task.limit
        merged.exhaustive = False
    return merged


def search_subtrees(task: SearchTask) -> Iterator[SearchResult]:
    """One result per top, ascending; sort keys start with the top, so subtrees never interleave."""
    return (search_top(task, top) for top in task.tops)


def enumerate_models(task: SearchTask) -> SearchResult:
    return merge_results(task, search_subtrees(task))


class ModelStream:
    """
    Hands out the models of one subtree at a time, in sort order and within the limit.
    The batches concatenate to the models of the merged result.
    """

    def __init__(self, task: SearchTask, subtrees: Iterable[SearchResult]):
        self.task = task
        self._subtrees = iter(subtrees)
        self._results: List[SearchResult] = []
        self._emitted = 0

    def next_batch(self) -> Optional[List[FiniteAlgebra]]:
        """None once the subtrees are exhausted or the limit is reached."""
        if self.task.limit and self._emitted >= self.task.limit:
            return None
        result = next(self._subtrees, None)
        if result is None:
            return None
        self._results.append(result)
        batch = sorted(result.models, key=FiniteAlgebra.sort_key)
        if self.task.limit:
            batch = batch[:self.task.limit - self._emitted]
        self._emitted += len(batch)
        return batch

    def result(self) -> SearchResult:
        return merge_results(self.task, self._results)

    def close(self):
        close = getattr(self._subtrees, "close", None)
        if close is not None:
            close()


def naive_enumerate(task: SearchTask) -> SearchResult:
    """Every table for every top, no pruning; the oracle for enumerate_models."""
    n = task.size
    cells = n * n * (2 if task.two_operation else 1)
    result = SearchResult()
    for top in task.tops:
        for values in itertools.product(range(n), repeat=cells):
            flat = np.array(values, dtype=np.intp)
            arrow = flat[:n * n].reshape(n, n)
            double = flat[n * n:].reshape(n, n) if task.two_operation else None
            alg = FiniteAlgebra(size=n, top=top, arrow=arrow, double_arrow=double)
            result.checked += 1
            if task.accepts(alg):
                result.count += 1
                result.models.append(alg)
    return merge_results(task, [result])
