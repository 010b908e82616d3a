"""
Representation and optimality of interval operations against the base arrow, and the
constructive refutation of BCI interval representations.
"""
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from source.CoreAlgebra import FiniteAlgebra, Verdict, check_bci, first_failure
from source.ErrorHandling import CoreException, PreconditionViolation, RepresentationPreconditionFailed
from source.Intervalization.Carrier import IntervalSpace
from source.Intervalization.IntervalAlgebra import IntervalOperation


def _base_table(op: IntervalOperation, base_op: Optional[np.ndarray]) -> np.ndarray:
    return op.space.base.arrow if base_op is None else np.asarray(base_op)


def _violations(op: IntervalOperation, base_op: np.ndarray) -> np.ndarray:
    """bad[X, Y, x, y]: x ∈ X, y ∈ Y and x⋄y outside X⋄Y."""
    space = op.space
    le = space.order.rel
    mem = space.membership
    out_lo = space.lo[op.table][:, :, None, None]
    out_hi = space.hi[op.table][:, :, None, None]
    values = base_op[None, None, :, :]
    inside = le[out_lo, values] & le[values, out_hi]
    both = mem[:, None, :, None] & mem[None, :, None, :]
    return both & ~inside


def check_representation(op: IntervalOperation, base_op: Optional[np.ndarray] = None) -> Verdict:
    bad = _violations(op, _base_table(op, base_op))
    if not bad.any():
        return Verdict(f"representation:{op.name}", True)
    return Verdict(f"representation:{op.name}", False, tuple(int(i) for i in np.argwhere(bad)[0]))


def pointwise_image(space: IntervalSpace, base_op: np.ndarray) -> np.ndarray:
    """image[X, Y, v]: v = x⋄y for some x ∈ X, y ∈ Y."""
    n = space.base.size
    mem = space.membership.astype(np.int64)
    hits = np.zeros((n, n, n), dtype=np.int64)
    hits[np.arange(n)[:, None], np.arange(n)[None, :], base_op] = 1
    return np.einsum("Xx,Yy,xyv->XYv", mem, mem, hits) > 0


def check_optimality(op: IntervalOperation, base_op: Optional[np.ndarray] = None) -> Verdict:
    """
    No proper base subinterval of X⋄Y may still hold the whole pointwise image.
    Witness is (X, Y, J) with J the smaller interval.
    """
    base_op = _base_table(op, base_op)
    if not check_representation(op, base_op).holds:
        raise RepresentationPreconditionFailed("check_optimality", f"{op.name} is not a representation")
    space = op.space
    le = space.order.rel
    image = pointwise_image(space, base_op)
    n = space.base.size
    c = np.arange(n)[:, None]
    d = np.arange(n)[None, :]
    # inside[c, d, v]: c ⪯ v ⪯ d
    inside = le[:, None, :] & le.T[None, :, :]
    # covers[X, Y, c, d]: [c, d] holds the whole image of X, Y
    covers = ~np.any(image[:, :, None, None, :] & ~inside[None, None, :, :, :], axis=-1)
    out_lo = space.lo[op.table][:, :, None, None]
    out_hi = space.hi[op.table][:, :, None, None]
    proper = le[out_lo, c] & le[c, d] & le[d, out_hi] & ~((c == out_lo) & (d == out_hi))
    smaller = covers & proper
    if not smaller.any():
        return Verdict(f"optimality:{op.name}", True)
    x, y, lo, hi = (int(i) for i in np.argwhere(smaller)[0])
    return Verdict(f"optimality:{op.name}", False, (x, y, space.index_of(lo, hi)))


@dataclass(frozen=True)
class Refutation:
    kind: str          # "representation" or "bci"
    case: int
    axiom: str
    witness: Tuple[int, ...]


def _comparable_pair(space: IntervalSpace) -> Tuple[int, int]:
    le = space.order.rel
    pairs = np.argwhere(le & ~np.eye(space.base.size, dtype=bool))
    if not pairs.size:
        raise PreconditionViolation("refute_bci_representation", "comparable-pair",
                                    "no a ≠ b with a→b = ⊤")
    return int(pairs[0][0]), int(pairs[0][1])


def _misses(space: IntervalSpace, output: int, value: int) -> bool:
    return not bool(space.membership[output, value])


def _bci_refutation(candidate: np.ndarray, top: int, case: int, labels) -> Optional[Refutation]:
    alg = FiniteAlgebra(size=candidate.shape[0], top=top, arrow=candidate, labels=labels)
    report = check_bci(alg)
    if report.passed:
        return None
    failure = first_failure(report)
    return Refutation("bci", case, failure.axiom, failure.witness)


def refute_bci_representation(space: IntervalSpace, candidate: np.ndarray, top: int) -> Refutation:
    """
    Given an operation on intervals with a chosen top, finds why it is not both a BCI-algebra
    and an interval representation of →. The case split is on the candidate top D:
    ⊤ ∉ D, D = [⊤,⊤], or D = [α,⊤] with α ≠ ⊤.
    """
    candidate = np.asarray(candidate, dtype=np.intp)
    arrow = space.base.arrow
    t = space.base.top
    a, b = _comparable_pair(space)
    d = space.carrier[top]
    labels = space.labels()

    if _misses(space, top, t):
        case, x = 1, space.index_of(a, a)
        if candidate[x, x] == top and _misses(space, top, int(arrow[a, a])):
            return Refutation("representation", case, "representation", (x, x, a, a))
        if candidate[x, x] != top:
            return Refutation("bci", case, "C-3", (x,))
    elif d.lo == t:
        case, x = 2, space.index_of(a, b)
        if candidate[x, x] == top and _misses(space, top, int(arrow[b, a])):
            return Refutation("representation", case, "representation", (x, x, b, a))
        if candidate[x, x] != top:
            return Refutation("bci", case, "C-3", (x,))
    else:
        case, alpha = 3, d.lo
        y = space.index_of(alpha, alpha)
        if candidate[top, y] == y and _misses(space, y, int(arrow[alpha, alpha])):
            return Refutation("representation", case, "representation", (top, y, alpha, alpha))

    found = _bci_refutation(candidate, top, case, labels)
    if found is not None:
        return found
    op = IntervalOperation("candidate", space, candidate)
    verdict = check_representation(op)
    if not verdict.holds:
        return Refutation("representation", case, "representation", verdict.witness)
    raise CoreException("refute_bci_representation", "candidate is a BCI interval representation",
                        f"case {case}", fatal=True)


def sweep_two_chain_candidates() -> Dict[str, int]:
    """Every operation on the three intervals of the 2-chain, with every top."""
    base = FiniteAlgebra(size=2, top=1, arrow=[[1, 1], [0, 1]], labels=("0", "1"))
    space = IntervalSpace.over(base)
    m = space.size
    counts: Counter = Counter()
    for cells in itertools.product(range(m), repeat=m * m):
        candidate = np.array(cells, dtype=np.intp).reshape(m, m)
        for top in range(m):
            refutation = refute_bci_representation(space, candidate, top)
            counts[refutation.kind] += 1
            counts[f"case-{refutation.case}"] += 1
            counts["total"] += 1
    return dict(counts)
