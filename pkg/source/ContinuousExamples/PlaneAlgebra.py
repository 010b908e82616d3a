from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from source.CoreAlgebra import AxiomContext, AxiomReport, PBCI_AXIOMS, SBCI_AXIOMS, evaluate
from source.CoreAlgebra.Engine import index_grid


@dataclass(frozen=True)
class PlaneAlgebra:
    """
    Two operations on ℝ² with top (0, 0); points carry their coordinates on the last axis.

        p ↠ q = (x₂−x₁, (y₂−y₁)·e^{−x₁})
        p → q = (x₂−x₁, y₂ − y₁·e^{x₂−x₁})
    """
    top: Tuple[float, float] = (0.0, 0.0)

    @staticmethod
    def double(p, q):
        p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
        dx = q[..., 0] - p[..., 0]
        return np.stack(np.broadcast_arrays(dx, (q[..., 1] - p[..., 1]) * np.exp(-p[..., 0])), axis=-1)

    @staticmethod
    def arrow(p, q):
        p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
        dx = q[..., 0] - p[..., 0]
        return np.stack(np.broadcast_arrays(dx, q[..., 1] - p[..., 1] * np.exp(dx)), axis=-1)


class PlaneContext(AxiomContext):
    """
    Box [lo, hi]² sampled with `resolution` points per axis for laws of arity up to two and
    `triple_resolution` for wider ones. Equality is numpy.isclose with rtol = atol = tolerance.
    """

    def __init__(self, plane: PlaneAlgebra, box: Tuple[float, float] = (-2.0, 2.0), resolution: int = 21,
                 triple_resolution: int = 9, tolerance: float = 1e-9):
        self.plane = plane
        self.top = np.array(plane.top, dtype=float)
        self.box = box
        self.resolution = resolution
        self.triple_resolution = triple_resolution
        self.tolerance = tolerance

    def arrow(self, x, y):
        return self.plane.arrow(x, y)

    def double(self, x, y):
        return self.plane.double(x, y)

    def eq(self, u, v):
        return np.all(np.isclose(u, v, rtol=self.tolerance, atol=self.tolerance), axis=-1)

    def _axis(self, arity: int) -> np.ndarray:
        return np.linspace(self.box[0], self.box[1], self.resolution if arity <= 2 else self.triple_resolution)

    def _sample(self, arity: int) -> np.ndarray:
        axis = self._axis(arity)
        xs, ys = np.meshgrid(axis, axis, indexing="ij")
        return np.stack([xs.ravel(), ys.ravel()], axis=-1)

    def points(self, arity: int) -> int:
        return len(self._axis(arity)) ** 2

    def variables(self, arity: int) -> Tuple:
        sample = self._sample(arity)
        return tuple(sample[grid] for grid in index_grid(len(sample), arity))

    def witness(self, arity: int, index: Sequence[int]) -> Tuple[Tuple[float, float], ...]:
        sample = self._sample(arity)
        return tuple((float(sample[i][0]), float(sample[i][1])) for i in index)

    def arguments(self, witness: Sequence) -> Tuple:
        return tuple(np.array(point, dtype=float) for point in witness)


def sbci1_difference(p, q, r) -> float:
    """Second-coordinate gap between p↠(q↠r) and q↠(p↠r); zero iff y₂(e^{x₁}−1) = y₁(e^{x₂}−1) for r = 0."""
    plane = PlaneAlgebra()
    left = plane.double(p, plane.double(q, r))
    right = plane.double(q, plane.double(p, r))
    return float(left[..., 1] - right[..., 1])


def plane_check(plane: Optional[PlaneAlgebra] = None, box: Tuple[float, float] = (-2.0, 2.0), resolution: int = 21,
                triple_resolution: int = 9, tolerance: float = 1e-9) -> AxiomReport:
    """PB-1..PB-7 sampled on the box, plus SBCI1 which is expected to fail."""
    ctx = PlaneContext(plane or PlaneAlgebra(), box, resolution, triple_resolution, tolerance)
    report = AxiomReport("plane", [evaluate(ctx, axiom) for axiom in PBCI_AXIOMS], mode="sampled")
    exchange = evaluate(ctx, SBCI_AXIOMS[0], expected=False)
    report.verdicts.append(exchange)
    if not exchange.holds:
        report.facts["SBCI1_gap"] = sbci1_difference(*exchange.witness)
    report.facts["box"] = list(box)
    return report
