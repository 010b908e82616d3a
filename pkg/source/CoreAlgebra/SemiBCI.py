from typing import Tuple

import numpy as np

from source.CoreAlgebra.Engine import MAX_CHECK_SIZE, Axiom, FiniteContext, implies, run_axioms
from source.CoreAlgebra.Structures import AxiomReport, FiniteAlgebra

# ⪯ comes from arrow, ≪ from double arrow

SBCI_AXIOMS: Tuple[Axiom, ...] = (
    Axiom("SBCI1", 3, lambda c, x, y, z: c.eq(c.double(x, c.double(y, z)), c.double(y, c.double(x, z))),
          "x↠(y↠z) = y↠(x↠z)"),
    Axiom("SBCI2", 3, lambda c, x, y, z: c.eq(c.arrow(x, c.arrow(y, z)), c.arrow(y, c.arrow(x, z))),
          "x→(y→z) = y→(x→z)"),
    Axiom("SBCI3", 3, lambda c, x, y, z: c.le(c.double(x, y), c.arrow(c.double(z, x), c.double(z, y))),
          "x↠y ⪯ (z↠x)→(z↠y)"),
    Axiom("SBCI4", 1, lambda c, x: c.eq(c.double(c.top, x), x),
          "⊤↠x = x"),
    Axiom("SBCI5", 3, lambda c, x, y, z: implies(c.ll(x, y) & c.le(y, z), c.ll(x, z)),
          "x ≪ y ⪯ z implies x ≪ z"),
    Axiom("SBCI6", 3, lambda c, x, y, z: implies(c.le(x, y) & c.ll(y, z), c.ll(x, z)),
          "x ⪯ y ≪ z implies x ≪ z"),
    Axiom("SBCI7", 2, lambda c, x, y: implies(c.le(x, y) & c.le(y, x), c.same(x, y)),
          "⪯ is antisymmetric"),
)

SBCI_DERIVED: Tuple[Axiom, ...] = (
    Axiom("SBCI8", 3, lambda c, x, y, z: implies(c.ll(x, y) & c.ll(y, z), c.ll(x, z)),
          "≪ is transitive"),
    Axiom("SBCI9", 2, lambda c, x, y: implies(c.ll(x, y) & c.ll(y, x), c.same(x, y)),
          "≪ is antisymmetric"),
    Axiom("SBCI10", 3, lambda c, x, y, z: c.le(c.double(y, z), c.arrow(c.double(z, x), c.double(y, x))),
          "y↠z ⪯ (z↠x)→(y↠x)"),
    Axiom("SBCI11", 1, lambda c, x: implies(c.le(c.top, x), c.same(x, c.top)),
          "⊤ ⪯ x implies x = ⊤"),
    Axiom("SBCI12", 1, lambda c, x: c.is_top(c.arrow(x, x)),
          "x→x = ⊤"),
    Axiom("SBCI13", 2, lambda c, x, y: implies(c.ll(x, y), c.le(x, y)),
          "x ≪ y implies x ⪯ y"),
    Axiom("SBCI14", 2, lambda c, x, y: c.le(c.double(x, y), c.arrow(x, y)),
          "x↠y ⪯ x→y"),
    Axiom("SBCI15", 2, lambda c, x, y: c.is_top(c.arrow(x, c.arrow(c.arrow(x, y), y))),
          "x→((x→y)→y) = ⊤"),
    Axiom("SBCI16", 2, lambda c, x, y: implies(c.ll(x, y), c.is_top(c.double(x, c.double(c.double(x, y), y)))),
          "x ≪ y implies x↠((x↠y)↠y) = ⊤"),
    Axiom("SBCI17", 3, lambda c, x, y, z: implies(c.ll(x, y), c.le(c.double(z, x), c.double(z, y))),
          "x ≪ y implies z↠x ⪯ z↠y"),
    Axiom("SBCI18", 3, lambda c, x, y, z: implies(c.ll(x, y), c.le(c.double(y, z), c.double(x, z))),
          "x ≪ y implies y↠z ⪯ x↠z"),
)

SBCK_AXIOM = Axiom("SBCK", 1, lambda c, x: c.ll(x, c.top), "x↠⊤ = ⊤")


def check_sbci(alg: FiniteAlgebra, max_size: int = MAX_CHECK_SIZE) -> AxiomReport:
    return run_axioms("SBCI", FiniteContext(alg, max_size=max_size), SBCI_AXIOMS)


def check_sbci_derived(alg: FiniteAlgebra) -> AxiomReport:
    return run_axioms("SBCI-derived", FiniteContext(alg), SBCI_DERIVED)


def total_elements(alg: FiniteAlgebra) -> Tuple[int, ...]:
    """Elements x with x ≪ x."""
    return tuple(int(x) for x in np.flatnonzero(np.diagonal(alg.double) == alg.top))


def check_sbck(alg: FiniteAlgebra) -> AxiomReport:
    report = run_axioms("SBCK", FiniteContext(alg), (SBCK_AXIOM,))
    report.facts["total_elements"] = list(total_elements(alg))
    return report
