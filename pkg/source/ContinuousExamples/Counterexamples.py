"""
Closed-form counterexamples
---------------------------
Each entry names an exact point (never a grid point), recomputes the quantities of interest
through the same implications the grid checks use, and compares them with the known values.
Entries whose known value is only quoted to a few decimals carry their own tolerance.
"""
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from source.CoreAlgebra import AxiomReport, Verdict
from source.ContinuousExamples.Implications import FD, GD, R, WB, YG
from source.ContinuousExamples.IntervalArithmetic import RealInterval, markov_sub, moore_ops
from source.ContinuousExamples.PlaneAlgebra import PlaneAlgebra

EXACT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class KnownCounterexample:
    name: str
    claim: str
    witness: Tuple[Any, ...]
    expected: Dict[str, float]
    compute: Callable[..., Dict[str, float]]
    tolerance: Optional[float] = None

    def recompute(self) -> Dict[str, float]:
        return {key: float(value) for key, value in self.compute(*self.witness).items()}


def _godel_fodor_pb2(x, y, z):
    lhs = FD(x, y)
    rhs = GD(FD(y, z), FD(x, z))
    return {"lhs": lhs, "rhs": rhs, "lhs→rhs": FD(lhs, rhs)}


def _markov(point_x, point_y):
    x = RealInterval(2.0, 3.0)
    result = markov_sub(x, x)
    value = point_x - point_y
    return {"lo": result.lo, "hi": result.hi, "point": value, "contained": float(result.contains(value)),
            "moore_width": moore_ops(x, x, "-").width}


def _plane_exchange(p, q, r):
    plane = PlaneAlgebra()
    left = plane.double(p, plane.double(q, r))
    right = plane.double(q, plane.double(p, r))
    return {"left_y": left[1], "right_y": right[1], "left_x": left[0], "right_x": right[0]}


def known_counterexamples() -> List[KnownCounterexample]:
    return [
        KnownCounterexample(
            "yager-order-property", "0.3 <= 0.5 but 0.3→YG 0.5 is not 1",
            (0.3, 0.5), {"value": 0.81225}, lambda x, y: {"value": YG(x, y)}, tolerance=5e-5,
        ),
        KnownCounterexample(
            "reichenbach-reduct-not-bci", "x↠R x = 1-x+x² is not 1",
            (0.5,), {"value": 0.75}, lambda x: {"value": R(x, x)},
        ),
        KnownCounterexample(
            "weber-antisymmetry", "x→WB y = y→WB x = 1 with x ≠ y",
            (0.5, 0.3), {"forward": 1.0, "backward": 1.0},
            lambda x, y: {"forward": WB(x, y), "backward": WB(y, x)},
        ),
        KnownCounterexample(
            "godel-fodor-pb2", "PB-2 fails for (GD, FD)",
            (0.75, 0.5, 0.2), {"lhs": 0.5, "rhs": 0.25, "lhs→rhs": 0.5}, _godel_fodor_pb2,
        ),
        KnownCounterexample(
            "markov-subtraction", "[2,3]-[2,3] = [0,0] misses 2.5-2.1",
            (2.5, 2.1), {"lo": 0.0, "hi": 0.0, "point": 0.4, "contained": 0.0, "moore_width": 2.0}, _markov,
        ),
        KnownCounterexample(
            "yager-sbci12", "x→YG x is not 1",
            (0.5,), {"value": 0.7071}, lambda x: {"value": YG(x, x)}, tolerance=1e-4,
        ),
        KnownCounterexample(
            "plane-sbci1", "↠ on the plane is not exchangeable",
            ((1.0, 0.0), (0.0, 1.0), (0.0, 0.0)),
            {"left_y": -math.exp(-1.0), "right_y": -1.0, "left_x": -1.0, "right_x": -1.0}, _plane_exchange,
        ),
    ]


def verify_counterexample(entry: KnownCounterexample, tolerance: float = EXACT_TOLERANCE) -> Verdict:
    tolerance = entry.tolerance if entry.tolerance is not None else tolerance
    values = entry.recompute()
    matches = all(abs(values[key] - expected) <= tolerance for key, expected in entry.expected.items())
    return Verdict(entry.name, matches, entry.witness, values=values)


def counterexample(name: str) -> KnownCounterexample:
    for entry in known_counterexamples():
        if entry.name == name:
            return entry
    raise KeyError(name)


def counterexample_report(names: Optional[Sequence[str]] = None, tolerance: float = EXACT_TOLERANCE) -> AxiomReport:
    entries = known_counterexamples() if names is None else [counterexample(name) for name in names]
    report = AxiomReport("exact", [verify_counterexample(entry, tolerance) for entry in entries])
    for entry in entries:
        report.facts[entry.name] = entry.claim
    return report
