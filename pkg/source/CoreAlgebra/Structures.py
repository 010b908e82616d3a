from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from source.ErrorHandling import InvalidAlgebraError, AbsentOperationError, NoMeetError

Table = NDArray[np.intp]


def _as_table(table, size: int, which: str) -> Table:
    array = np.array(table, dtype=np.intp)
    if array.shape != (size, size):
        raise InvalidAlgebraError(f"{which} table has shape {array.shape}", f"expected ({size}, {size})")
    if array.size and (array.min() < 0 or array.max() >= size):
        bad = tuple(int(i) for i in np.argwhere((array < 0) | (array >= size))[0])
        raise InvalidAlgebraError(f"{which} entry at {bad} is out of range", f"entries must lie in [0, {size})")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """
    Carrier {0..n-1} with the arrow table, an optional double arrow table and a top element.

    Without a double arrow table, two-operation checkers read the arrow table in its place.
    """
    size: int
    top: int
    arrow: Table
    double_arrow: Optional[Table] = None
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 1:
            raise InvalidAlgebraError(f"size {self.size} is not positive")
        if not 0 <= self.top < self.size:
            raise InvalidAlgebraError(f"top {self.top} is out of range")
        object.__setattr__(self, "arrow", _as_table(self.arrow, self.size, "arrow"))
        if self.double_arrow is not None:
            object.__setattr__(self, "double_arrow", _as_table(self.double_arrow, self.size, "double_arrow"))
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.size:
                raise InvalidAlgebraError(f"{len(labels)} labels for {self.size} elements")
            object.__setattr__(self, "labels", labels)

    @property
    def is_two_operation(self) -> bool:
        return self.double_arrow is not None

    @property
    def double(self) -> Table:
        return self.arrow if self.double_arrow is None else self.double_arrow

    def table(self, which: str) -> Table:
        if which == "arrow":
            return self.arrow
        if which == "double_arrow":
            if self.double_arrow is None:
                raise AbsentOperationError("FiniteAlgebra.table", which)
            return self.double_arrow
        raise ValueError(f"Unknown operation {which}")

    def label(self, element: int) -> str:
        return self.labels[element] if self.labels is not None else str(element)

    def replace(self, **changes) -> "FiniteAlgebra":
        values = dict(size=self.size, top=self.top, arrow=self.arrow,
                      double_arrow=self.double_arrow, labels=self.labels)
        values.update(changes)
        return FiniteAlgebra(**values)

    def sort_key(self) -> Tuple:
        double = b"" if self.double_arrow is None else self.double_arrow.tobytes()
        return self.size, self.top, self.arrow.tobytes(), double

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        if (self.size, self.top, self.labels) != (other.size, other.top, other.labels):
            return False
        if (self.double_arrow is None) != (other.double_arrow is None):
            return False
        if not np.array_equal(self.arrow, other.arrow):
            return False
        return self.double_arrow is None or np.array_equal(self.double_arrow, other.double_arrow)

    def __hash__(self):
        return hash((self.sort_key(), self.labels))

    def __repr__(self):
        kind = "two-operation" if self.is_two_operation else "single-operation"
        return f"FiniteAlgebra(size={self.size}, top={self.top}, {kind})"


@dataclass(frozen=True, eq=False)
class RelationMatrix:
    """
    Boolean matrix of a derived relation; the structural flags are computed on construction.
    """
    size: int
    rel: NDArray[np.bool_]
    reflexive: bool = field(init=False)
    antisymmetric: bool = field(init=False)
    transitive: bool = field(init=False)
    witnesses: Dict[str, Tuple[int, ...]] = field(init=False)

    def __post_init__(self):
        rel = np.array(self.rel, dtype=bool)
        rel.setflags(write=False)
        object.__setattr__(self, "rel", rel)
        witnesses: Dict[str, Tuple[int, ...]] = {}

        irreflexive = np.flatnonzero(~np.diagonal(rel))
        if irreflexive.size:
            witnesses["reflexive"] = (int(irreflexive[0]),)

        both = rel & rel.T & ~np.eye(self.size, dtype=bool)
        if both.any():
            witnesses["antisymmetric"] = tuple(int(i) for i in np.argwhere(both)[0])

        # x rel y, y rel z, not x rel z
        broken = rel[:, :, None] & rel[None, :, :] & ~rel[:, None, :]
        if broken.any():
            witnesses["transitive"] = tuple(int(i) for i in np.argwhere(broken)[0])

        object.__setattr__(self, "witnesses", witnesses)
        object.__setattr__(self, "reflexive", "reflexive" not in witnesses)
        object.__setattr__(self, "antisymmetric", "antisymmetric" not in witnesses)
        object.__setattr__(self, "transitive", "transitive" not in witnesses)

    @property
    def is_partial_order(self) -> bool:
        return self.reflexive and self.antisymmetric and self.transitive

    def failing_flags(self) -> Tuple[str, ...]:
        return tuple(name for name in ("reflexive", "antisymmetric", "transitive") if name in self.witnesses)

    def __call__(self, x, y):
        return self.rel[x, y]

    def __eq__(self, other):
        if not isinstance(other, RelationMatrix):
            return NotImplemented
        return self.size == other.size and np.array_equal(self.rel, other.rel)

    def __hash__(self):
        return hash((self.size, self.rel.tobytes()))


@dataclass(frozen=True, eq=False)
class MeetStructure:
    meet: Optional[Table] = None
    witness: Optional[Tuple[int, int]] = None

    @property
    def present(self) -> bool:
        return self.meet is not None

    def require(self, where: str = "meet") -> Table:
        if self.meet is None:
            raise NoMeetError(where, self.witness)
        return self.meet


@dataclass(frozen=True)
class Verdict:
    axiom: str
    holds: bool
    witness: Tuple[Any, ...] = ()
    # negative claims are expected to fail
    expected: bool = True
    values: Optional[Dict[str, float]] = None

    @property
    def conforms(self) -> bool:
        return self.holds == self.expected


@dataclass
class AxiomReport:
    system: str
    verdicts: List[Verdict] = field(default_factory=list)
    facts: Dict[str, Any] = field(default_factory=dict)
    mode: str = "exhaustive"

    @property
    def passed(self) -> bool:
        return all(verdict.conforms for verdict in self.verdicts)

    def verdict(self, axiom: str) -> Verdict:
        for verdict in self.verdicts:
            if verdict.axiom == axiom:
                return verdict
        raise KeyError(axiom)

    def failures(self) -> List[Verdict]:
        return [verdict for verdict in self.verdicts if not verdict.holds]

    def status(self, verdict: Verdict) -> str:
        if self.mode == "sampled":
            return "sampled-pass" if verdict.holds else "fail"
        return "pass" if verdict.holds else "fail"

    def extend(self, other: "AxiomReport") -> "AxiomReport":
        self.verdicts.extend(other.verdicts)
        self.facts.update(other.facts)
        return self


def labelled(alg: FiniteAlgebra, witness: Sequence[int]) -> Tuple[str, ...]:
    return tuple(alg.label(int(element)) for element in witness)
