"""
Pseudo-BCI laws.

The order ≤ is the relation derived from the arrow table. In the laws below the arrow
table plays the role of ⇝ and the double arrow table the role of →, so that a pair such as
(Gödel as double arrow, Fodor as arrow) is read the same way as an SBCI pair.
PB-7 then asks that the double arrow derive the same relation.
"""
from typing import Tuple

from source.CoreAlgebra.Engine import Axiom, FiniteContext, iff, implies, run_axioms
from source.CoreAlgebra.Structures import AxiomReport, FiniteAlgebra

PBCI_AXIOMS: Tuple[Axiom, ...] = (
    Axiom("PB-1", 3, lambda c, x, y, z: c.le(c.double(x, y), c.arrow(c.double(y, z), c.double(x, z))),
          "x↠y ≤ (y↠z)→(x↠z)"),
    Axiom("PB-2", 3, lambda c, x, y, z: c.le(c.arrow(x, y), c.double(c.arrow(y, z), c.arrow(x, z))),
          "x→y ≤ (y→z)↠(x→z)"),
    Axiom("PB-3", 2, lambda c, x, y: c.le(x, c.arrow(c.double(x, y), y)),
          "x ≤ (x↠y)→y"),
    Axiom("PB-4", 2, lambda c, x, y: c.le(x, c.double(c.arrow(x, y), y)),
          "x ≤ (x→y)↠y"),
    Axiom("PB-5", 1, lambda c, x: c.le(x, x),
          "x ≤ x"),
    Axiom("PB-6", 2, lambda c, x, y: implies(c.le(x, y) & c.le(y, x), c.same(x, y)),
          "≤ is antisymmetric"),
    Axiom("PB-7", 2, lambda c, x, y: iff(c.le(x, y), c.ll(x, y)),
          "x→y = ⊤ iff x↠y = ⊤"),
)


def check_pbci(alg: FiniteAlgebra) -> AxiomReport:
    return run_axioms("PBCI", FiniteContext(alg), PBCI_AXIOMS)
