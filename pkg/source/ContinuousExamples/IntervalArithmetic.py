from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from source.CoreAlgebra import AxiomReport, Verdict
from source.ContinuousExamples.Implications import LK, UnitImplication
from source.ErrorHandling import IntervalDivisionError, InvalidIntervalError


@dataclass(frozen=True)
class RealInterval:
    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidIntervalError("RealInterval", self.lo, self.hi)

    @classmethod
    def point(cls, value: float) -> "RealInterval":
        return cls(value, value)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: float, tolerance: float = 0.0) -> bool:
        return self.lo - tolerance <= value <= self.hi + tolerance

    def __add__(self, other: "RealInterval") -> "RealInterval":
        return moore_ops(self, other, "+")

    def __sub__(self, other: "RealInterval") -> "RealInterval":
        return moore_ops(self, other, "-")

    def __mul__(self, other: "RealInterval") -> "RealInterval":
        return moore_ops(self, other, "*")

    def __truediv__(self, other: "RealInterval") -> "RealInterval":
        return moore_ops(self, other, "/")

    def __str__(self):
        return f"[{self.lo:g}, {self.hi:g}]"


def moore_ops(x: RealInterval, y: RealInterval, op: str) -> RealInterval:
    if op == "+":
        return RealInterval(x.lo + y.lo, x.hi + y.hi)
    if op == "-":
        return RealInterval(x.lo - y.hi, x.hi - y.lo)
    if op in ("*", "·"):
        products = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
        return RealInterval(min(products), max(products))
    if op == "/":
        if y.lo <= 0 <= y.hi:
            raise IntervalDivisionError("moore_ops", y)
        return moore_ops(x, RealInterval(1 / y.hi, 1 / y.lo), "*")
    raise ValueError(f"Unknown interval operation {op}")


def markov_sub(x: RealInterval, y: RealInterval) -> RealInterval:
    first, second = x.lo - y.lo, x.hi - y.hi
    return RealInterval(min(first, second), max(first, second))


def real_interval_implication(x: RealInterval, y: RealInterval,
                              base: UnitImplication = LK) -> Tuple[RealInterval, RealInterval]:
    """(X ⇒> Y, X ⇒ Y) over [0,1] with min as meet."""
    for interval in (x, y):
        if interval.lo < 0 or interval.hi > 1:
            raise InvalidIntervalError("real_interval_implication", interval.lo, interval.hi)
    best = RealInterval(float(base(x.hi, y.lo)), float(base(x.lo, y.hi)))
    km = RealInterval(float(min(base(x.lo, y.lo), base(x.hi, y.hi))), float(base(x.lo, y.hi)))
    return best, km


def sampled_correctness(x: RealInterval, y: RealInterval, base: UnitImplication = LK, samples: int = 21,
                        tolerance: float = 1e-9) -> Optional[Tuple[float, float]]:
    """First sampled member pair whose pointwise value escapes X ⇒> Y, or None."""
    best, _ = real_interval_implication(x, y, base)
    xs, ys = np.meshgrid(np.linspace(x.lo, x.hi, samples), np.linspace(y.lo, y.hi, samples), indexing="ij")
    values = base(xs, ys)
    outside = (values < best.lo - tolerance) | (values > best.hi + tolerance)
    if not outside.any():
        return None
    i, j = np.argwhere(outside)[0]
    return float(xs[i, j]), float(ys[i, j])


def lk_interval_report(samples: int = 200, seed: int = 0, tolerance: float = 1e-9) -> AxiomReport:
    """Sampled properties of the Łukasiewicz interval implication on random subintervals of [0,1]."""
    rng = np.random.default_rng(seed)
    ends = np.sort(rng.random((samples, 2, 2)), axis=-1)
    pairs = [(RealInterval(*x), RealInterval(*y)) for x, y in ends]
    pairs.append((RealInterval(0.0, 0.0), RealInterval(1.0, 1.0)))

    def first(predicate):
        for k, (x, y) in enumerate(pairs):
            if not predicate(x, y):
                return k
        return None

    def is_top(interval: RealInterval) -> bool:
        return abs(interval.lo - 1.0) <= tolerance and abs(interval.hi - 1.0) <= tolerance

    def best(x, y):
        return real_interval_implication(x, y)[0]

    checks = {
        "best-correct": lambda x, y: sampled_correctness(x, y, tolerance=tolerance) is None,
        "way-below-top": lambda x, y: not x.hi < y.lo or is_top(best(x, y)),
        "top-km-order": lambda x, y: not is_top(best(x, y)) or (x.lo <= y.lo and x.hi <= y.hi),
        "km-within-best": lambda x, y: best(x, y).lo <= real_interval_implication(x, y)[1].lo + tolerance,
    }
    verdicts = []
    for name, predicate in checks.items():
        failing = first(predicate)
        witness = () if failing is None else (pairs[failing][0].lo, pairs[failing][0].hi,
                                              pairs[failing][1].lo, pairs[failing][1].hi)
        verdicts.append(Verdict(name, failing is None, witness))
    report = AxiomReport("interval-LK", verdicts, mode="sampled")
    report.facts["samples"] = len(pairs)
    report.facts["[0,0]=>[1,1]"] = str(best(RealInterval(0.0, 0.0), RealInterval(1.0, 1.0)))
    return report
