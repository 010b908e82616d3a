"""
Command bodies. Each takes already loaded inputs and returns (exit code, Report); file and
console I/O, logging and exception mapping live in the service.
"""
import time
from dataclasses import dataclass, replace
from types import MappingProxyType
from typing import Callable, List, Optional, Sequence, Tuple

from source.CoreAlgebra import (
    AxiomReport, CHECKERS, FiniteAlgebra, SBCI_AXIOMS, Verdict, check_sbci, coincidence_report,
)
from source.CoreAlgebra.Registry import validate_systems
from source.ContinuousExamples import (
    FD, GD, LK, R, WB, YG, GridContext, GridSpec, RealInterval, chain_restriction, grid_axioms, grid_check,
    markov_sub, moore_ops, order_property_check, plane_check,
)
from source.ContinuousExamples.Counterexamples import EXACT_TOLERANCE, counterexample_report
from source.ContinuousExamples.IntervalArithmetic import lk_interval_report
from source.ErrorHandling import UnknownDemoError
from source.Intervalization import (
    MAX_INTERVAL_SIZE, check_optimality, check_representation, ibci_as_sbci, intervalize, verify_ibci,
    verify_ibci_derived,
)
from source.Cli.AlgebraFile import render_algebra
from source.Cli.Reports import Report
from source.ModelSearch import (
    ModelStream, SearchResult, SearchTask, classify, parallel_subtrees, search_subtrees, verify_intersection,
)

PASS, FAIL, USAGE = 0, 1, 2

GODEL_FODOR_CHAIN = (0.0, 0.2, 0.25, 0.5, 0.75, 0.8, 1.0)
GODEL_FODOR_LABELS = ("0", "1/5", "1/4", "1/2", "3/4", "4/5", "1")


@dataclass(frozen=True)
class RunSettings:
    grid: GridSpec = GridSpec()
    exact_tolerance: float = EXACT_TOLERANCE
    plane_box: Tuple[float, float] = (-2.0, 2.0)
    plane_resolution: int = 21
    plane_triple_resolution: int = 9
    workers: int = 1
    max_single: int = 5
    max_double: int = 4


def _timed(function: Callable[[], AxiomReport]) -> Tuple[AxiomReport, float]:
    start = time.perf_counter()
    report = function()
    return report, time.perf_counter() - start


def _code(report: Report) -> int:
    return PASS if report.passed else FAIL


def cmd_check(alg: FiniteAlgebra, systems: Sequence[str], subject: str = "algebra") -> Tuple[int, Report]:
    validate_systems(systems)
    report = Report("check", subject)
    for name in systems:
        axiom_report, seconds = _timed(lambda: CHECKERS[name](alg))
        report.add(axiom_report, alg.labels, seconds)
    report.notes["size"] = alg.size
    return _code(report), report


def cmd_intervalize(alg: FiniteAlgebra, verify: bool = False,
                    subject: str = "algebra") -> Tuple[int, Report, FiniteAlgebra]:
    ia = intervalize(alg)
    interval = ibci_as_sbci(ia)
    report = Report("intervalize", subject)
    report.notes["intervals"] = ia.size
    report.notes["top"] = ia.space.label(ia.top)
    if verify:
        labels = interval.labels
        for build in (lambda: verify_ibci(ia), lambda: verify_ibci_derived(ia)):
            axiom_report, seconds = _timed(build)
            report.add(axiom_report, labels, seconds)

        def representation() -> AxiomReport:
            nondegenerate = bool((~ia.space.degenerate).any())
            verdicts = [check_representation(ia.best), check_optimality(ia.best)]
            verdicts.append(replace(check_representation(ia.km), expected=not nondegenerate))
            return AxiomReport("representation", verdicts)

        axiom_report, seconds = _timed(representation)
        report.add(axiom_report, None, seconds)
        axiom_report, seconds = _timed(lambda: check_sbci(interval, max_size=MAX_INTERVAL_SIZE))
        report.add(axiom_report, labels, seconds)
    return _code(report), report, interval


def model_text(alg: FiniteAlgebra) -> str:
    comment = f"region: {classify(alg).value}" if alg.is_two_operation else None
    return render_algebra(alg, comment)


def search_header(task: SearchTask) -> Report:
    return Report("search", f"n={task.size}")


def _search_report(task: SearchTask, result: SearchResult) -> Report:
    report = search_header(task)
    report.notes["require"] = ",".join(task.require)
    if task.forbid:
        report.notes["forbid"] = ",".join(task.forbid)
    report.notes["count"] = result.count
    report.notes["checked"] = result.checked
    report.notes["pruned"] = result.pruned
    report.notes["exhaustive"] = result.exhaustive
    report.models.extend(map(model_text, result.models))
    return report


def open_search(task: SearchTask, workers: int = 1) -> ModelStream:
    subtrees = parallel_subtrees(task, workers) if workers > 1 else search_subtrees(task)
    return ModelStream(task, subtrees)


def finish_search(task: SearchTask, stream: ModelStream) -> Tuple[int, Report, SearchResult]:
    result = stream.result()
    return PASS, _search_report(task, result), result


def cmd_search(task: SearchTask, workers: int = 1) -> Tuple[int, Report, SearchResult]:
    stream = open_search(task, workers)
    try:
        while stream.next_batch() is not None:
            pass
    finally:
        stream.close()
    return finish_search(task, stream)


def cmd_intersection(size: int, settings: RunSettings = RunSettings()) -> Tuple[int, Report]:
    report = Report("intersection", f"n={size}")
    axiom_report, seconds = _timed(lambda: verify_intersection(size, settings.workers, settings.max_double))
    report.add(axiom_report, None, seconds)
    return _code(report), report


def _expect_failure(report: AxiomReport, names: Optional[Sequence[str]] = None) -> AxiomReport:
    report.verdicts = [
        replace(v, expected=False) if names is None or v.axiom in names else v for v in report.verdicts
    ]
    return report


def _demo_reichenbach_lk(settings: RunSettings) -> List[AxiomReport]:
    coincide = coincidence_report(GridContext(R, LK, GridSpec(3, settings.grid.tolerance)), "R/LK-coincide",
                                  mode="sampled")
    return [
        grid_check(R, LK, SBCI_AXIOMS, settings.grid),
        coincide,
        counterexample_report(["reichenbach-reduct-not-bci"], settings.exact_tolerance),
    ]


def _demo_godel_fodor(settings: RunSettings) -> List[AxiomReport]:
    chain = chain_restriction(GD, FD, GODEL_FODOR_CHAIN, GODEL_FODOR_LABELS)
    region = AxiomReport("GD/FD-chain", [Verdict("SBCI-only", classify(chain).value == "SBCI-only")])
    region.facts["region"] = classify(chain).value
    return [
        grid_check(GD, FD, SBCI_AXIOMS, settings.grid, negative=grid_axioms(["PB-2"])),
        order_property_check(GD, settings.grid),
        order_property_check(FD, settings.grid),
        counterexample_report(["godel-fodor-pb2"], settings.exact_tolerance),
        region,
    ]


def _demo_yager(settings: RunSettings) -> List[AxiomReport]:
    return [
        counterexample_report(["yager-order-property", "yager-sbci12"], settings.exact_tolerance),
        _expect_failure(order_property_check(YG, settings.grid), ["order-forward"]),
        grid_check(YG, YG, (), settings.grid, negative=grid_axioms(["SBCI12"])),
    ]


def _demo_weber(settings: RunSettings) -> List[AxiomReport]:
    return [
        grid_check(WB, WB, (), settings.grid, negative=grid_axioms(["SBCI7"])),
        counterexample_report(["weber-antisymmetry"], settings.exact_tolerance),
    ]


def _demo_plane(settings: RunSettings) -> List[AxiomReport]:
    return [
        plane_check(box=settings.plane_box, resolution=settings.plane_resolution,
                    triple_resolution=settings.plane_triple_resolution, tolerance=settings.grid.tolerance),
        counterexample_report(["plane-sbci1"], settings.exact_tolerance),
    ]


def _demo_markov(settings: RunSettings) -> List[AxiomReport]:
    x = RealInterval(2.0, 3.0)
    report = counterexample_report(["markov-subtraction"], settings.exact_tolerance)
    report.facts["moore [2,3]-[2,3]"] = str(moore_ops(x, x, "-"))
    report.facts["markov [2,3]-[2,3]"] = str(markov_sub(x, x))
    report.facts["excluded"] = "2.5-2.1 = 0.4"
    return [report]


def _demo_interval_lk(settings: RunSettings) -> List[AxiomReport]:
    return [lk_interval_report(tolerance=settings.grid.tolerance)]


DEMOS = MappingProxyType({
    "reichenbach-lk": _demo_reichenbach_lk,
    "godel-fodor": _demo_godel_fodor,
    "yager": _demo_yager,
    "weber": _demo_weber,
    "plane-pbci": _demo_plane,
    "markov": _demo_markov,
    "interval-lk": _demo_interval_lk,
})


def cmd_demo(name: str, settings: RunSettings = RunSettings()) -> Tuple[int, Report]:
    if name not in DEMOS:
        raise UnknownDemoError(name, DEMOS.keys())
    report = Report("demo", name)
    for axiom_report in DEMOS[name](settings):
        report.add(axiom_report)
    report.notes["grid"] = f"{settings.grid.resolution} points, tolerance {settings.grid.tolerance:g}"
    return _code(report), report

