import enum
from typing import Optional

import numpy as np

from source.CoreAlgebra import AxiomReport, FiniteAlgebra, Verdict, check_bci, check_pbci, check_sbci
from source.ErrorHandling import CoreException, PreconditionViolation
from source.ModelSearch.Search import SearchTask, enumerate_models
from source.ModelSearch.Workers import parallel_enumerate


class Region(enum.Enum):
    BCI = "BCI"
    SBCI_ONLY = "SBCI-only"
    PBCI_ONLY = "PBCI-only"
    NEITHER = "neither"


def classify(alg: FiniteAlgebra) -> Region:
    if not alg.is_two_operation:
        raise PreconditionViolation("classify", "two-operation", "algebra has no double arrow table")
    sbci = check_sbci(alg).passed
    pbci = check_pbci(alg).passed
    if sbci and pbci:
        if not np.array_equal(alg.arrow, alg.double_arrow):
            raise CoreException("classify", "SBCI and PBCI with distinct tables", repr(alg), fatal=True)
        return Region.BCI
    if sbci:
        return Region.SBCI_ONLY
    if pbci:
        return Region.PBCI_ONLY
    return Region.NEITHER


def verify_intersection(size: int, workers: int = 1, max_double: Optional[int] = None) -> AxiomReport:
    """
    Every two-operation algebra of the given size passing SBCI and PBCI must have equal
    tables and a BCI reduct.
    """
    extra = {} if max_double is None else {"max_double": max_double}
    task = SearchTask(size, ("sbci", "pbci"), **extra)
    result = parallel_enumerate(task, workers) if workers > 1 else enumerate_models(task)
    unequal = [k for k, alg in enumerate(result.models) if not np.array_equal(alg.arrow, alg.double_arrow)]
    not_bci = [k for k, alg in enumerate(result.models) if not check_bci(alg.replace(double_arrow=None)).passed]
    report = AxiomReport("intersection", [
        Verdict("tables-equal", not unequal, tuple(unequal[:1])),
        Verdict("reduct-bci", not not_bci, tuple(not_bci[:1])),
    ])
    report.facts["size"] = size
    report.facts["checked"] = result.count
    report.facts["violations"] = len(set(unequal) | set(not_bci))
    report.facts["pruned"] = result.pruned
    return report
