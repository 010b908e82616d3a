from dataclasses import replace
from typing import Tuple

import numpy as np

from source.CoreAlgebra import Axiom, AxiomReport, FiniteContext, SBCI_AXIOMS, evaluate
from source.CoreAlgebra.Engine import iff, implies, run_axioms
from source.Intervalization.Carrier import MAX_INTERVAL_SIZE
from source.Intervalization.IntervalAlgebra import IntervalAlgebra, ibci_as_sbci


class IntervalContext(FiniteContext):
    """
    Finite context over the interval carrier, ↠ read as ⇒> and → as ⇒, with the endpoint
    arrays of the base exposed so laws can speak about X̲, X̄ and degeneracy.
    """

    def __init__(self, ia: IntervalAlgebra, max_size: int = MAX_INTERVAL_SIZE):
        super().__init__(ibci_as_sbci(ia), max_size=max_size)
        space = ia.space
        self.space = space
        self.lo = space.lo
        self.hi = space.hi
        self.deg = space.degenerate
        self.index = space.index
        self.base_arrow = ia.base.arrow
        self.base_top = ia.base.top
        self.base_le = space.order.rel
        self.km_rel = space.km_order.rel
        self.wb_rel = space.wb_order.rel

    def interval(self, lo, hi):
        return self.index[lo, hi]

    def km(self, x, y):
        return self.km_rel[x, y]

    def wb(self, x, y):
        return self.wb_rel[x, y]


IBCI_AXIOMS: Tuple[Axiom, ...] = tuple(
    replace(axiom, name=f"IBCI{number}", statement=axiom.statement.replace("↠", "⇒>").replace("→", "⇒"))
    for number, axiom in enumerate(SBCI_AXIOMS, start=1)
)


def _best_top(c, x, y):
    return c.is_top(c.double(x, y))


IBCI_DERIVED: Tuple[Axiom, ...] = (
    Axiom("G-1", 1, lambda c, x: c.eq(c.double(x, x), c.interval(c.base_arrow[c.hi[x], c.lo[x]], c.base_top)),
          "X⇒>X = [X̄→X̲, ⊤]"),
    Axiom("G-2", 2, lambda c, x, y: iff(_best_top(c, x, y), c.base_le[c.hi[x], c.lo[y]]),
          "X⇒>Y = [⊤,⊤] iff X̄ ⪯ Y̲"),
    Axiom("degenerate-iff-self-top", 1, lambda c, x: iff(_best_top(c, x, x), c.deg[x]),
          "X⇒>X = [⊤,⊤] iff X is degenerate"),
    Axiom("Cd-1", 3, lambda c, y, z, x: implies(
        c.deg[x], c.km(c.double(y, z), c.double(c.double(z, x), c.double(y, x)))),
          "Y⇒>Z ≾ (Z⇒>X_d)⇒>(Y⇒>X_d)"),
    Axiom("Cd-2", 2, lambda c, x, y: implies(
        c.deg[x] & c.deg[y], _best_top(c, x, c.double(c.double(x, y), y))),
          "X_d⇒>((X_d⇒>Y_d)⇒>Y_d) = [⊤,⊤]"),
    Axiom("Cd-3", 2, lambda c, x, y: implies(c.deg[y], c.eq(c.double(x, y), c.arrow(x, y))),
          "X⇒>X_d = X⇒X_d"),
    Axiom("B-1", 1, lambda c, x: implies(c.km(c.top, x), c.same(x, c.top)),
          "[⊤,⊤] ≾ X implies X = [⊤,⊤]"),
    Axiom("B-2", 3, lambda c, x, y, z: implies(c.km(x, y), c.km(c.double(y, z), c.double(x, z))),
          "X ≾ Y implies Y⇒>Z ≾ X⇒>Z"),
    Axiom("B-3", 3, lambda c, x, y, z: implies(c.km(x, y), c.km(c.double(z, x), c.double(z, y))),
          "X ≾ Y implies Z⇒>X ≾ Z⇒>Y"),
    Axiom("B-4", 3, lambda c, x, y, z: implies(c.km(x, y) & c.km(y, z), c.km(x, z)),
          "≾ is transitive"),
    Axiom("B-5", 3, lambda c, x, y, z: implies(c.deg[z] & c.km(x, c.double(y, z)), c.km(y, c.double(x, z))),
          "X ≾ Y⇒>Z_d implies Y ≾ X⇒>Z_d"),
    Axiom("B-6", 3, lambda c, x, y, z: implies(
        c.deg[z], c.km(c.double(x, y), c.double(c.double(z, x), c.double(z, y)))),
          "X⇒>Y ≾ (Z_d⇒>X)⇒>(Z_d⇒>Y)"),
    Axiom("B-7", 2, lambda c, y, x: implies(
        c.deg[x], c.eq(c.double(c.double(c.double(y, x), x), x), c.double(y, x))),
          "((Y⇒>X_d)⇒>X_d)⇒>X_d = Y⇒>X_d"),
    Axiom("B-8", 2, lambda c, x, y: c.km(c.double(x, y), c.double(c.double(y, x), c.top)),
          "X⇒>Y ≾ (Y⇒>X)⇒>[⊤,⊤]"),
    Axiom("B-9", 2, lambda c, x, y: c.eq(c.double(c.double(x, y), c.top),
                                         c.double(c.double(x, c.top), c.double(y, c.top))),
          "(X⇒>Y)⇒>[⊤,⊤] = (X⇒>[⊤,⊤])⇒>(Y⇒>[⊤,⊤])"),
    Axiom("r-WOP", 2, lambda c, x, y: implies(
        c.km(x, y), c.eq(c.double(x, y), c.interval(c.base_arrow[c.hi[x], c.lo[y]], c.base_top))),
          "X ≾ Y implies X⇒>Y = [X̄→Y̲, ⊤]"),
    Axiom("OPa", 2, lambda c, x, y: implies(c.wb(x, y), c.is_top(c.arrow(x, y))),
          "X ≪ Y implies X⇒Y = [⊤,⊤]"),
    Axiom("OPb", 2, lambda c, x, y: implies(_best_top(c, x, y), c.km(x, y)),
          "X⇒>Y = [⊤,⊤] implies X ≾ Y"),
    Axiom("degenerate-preservation", 2, lambda c, x, y: implies(
        c.deg[x] & c.deg[y], c.deg[c.double(x, y)] & c.deg[c.arrow(x, y)]),
          "both operations map degenerate pairs to degenerate intervals"),
    Axiom("km-order-derived", 2, lambda c, x, y: iff(c.km(x, y), c.is_top(c.arrow(x, y))),
          "X ≾ Y iff X⇒Y = [⊤,⊤]"),
    Axiom("wb-order-derived", 2, lambda c, x, y: iff(c.wb(x, y), _best_top(c, x, y)),
          "X ≪ Y iff X⇒>Y = [⊤,⊤]"),
)

# claimed not to hold once a non-degenerate interval exists
OP_NEGATIVE: Tuple[Axiom, ...] = (
    Axiom("OP_M1", 2, lambda c, x, y: iff(c.wb(x, y), c.is_top(c.arrow(x, y))),
          "X ≪ Y iff X⇒Y = [⊤,⊤]"),
    Axiom("OP_M2", 2, lambda c, x, y: iff(c.km(x, y), _best_top(c, x, y)),
          "X ≾ Y iff X⇒>Y = [⊤,⊤]"),
)


def verify_ibci(ia: IntervalAlgebra) -> AxiomReport:
    return run_axioms("IBCI", IntervalContext(ia), IBCI_AXIOMS)


def verify_ibci_derived(ia: IntervalAlgebra) -> AxiomReport:
    ctx = IntervalContext(ia)
    report = run_axioms("IBCI-derived", ctx, IBCI_DERIVED)
    nondegenerate = bool(np.any(~ctx.deg))
    for axiom in OP_NEGATIVE:
        report.verdicts.append(evaluate(ctx, axiom, expected=not nondegenerate))
    report.facts["nondegenerate"] = nondegenerate
    report.facts["intervals"] = ia.size
    return report
