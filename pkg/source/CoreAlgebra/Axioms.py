from typing import Tuple

from source.CoreAlgebra.Engine import MAX_CHECK_SIZE, Axiom, FiniteContext, evaluate, exists, implies, run_axioms
from source.CoreAlgebra.Structures import AxiomReport, FiniteAlgebra, Verdict

# laws take the evaluation context first, then the quantified variables

BCI_AXIOMS: Tuple[Axiom, ...] = (
    Axiom("C-1", 3, lambda c, x, y, z: c.is_top(c.arrow(c.arrow(y, z), c.arrow(c.arrow(z, x), c.arrow(y, x)))),
          "(y→z)→((z→x)→(y→x)) = ⊤"),
    Axiom("C-2", 2, lambda c, x, y: c.is_top(c.arrow(x, c.arrow(c.arrow(x, y), y))),
          "x→((x→y)→y) = ⊤"),
    Axiom("C-3", 1, lambda c, x: c.is_top(c.arrow(x, x)),
          "x→x = ⊤"),
    Axiom("C-4", 2, lambda c, x, y: implies(c.le(x, y) & c.le(y, x), c.same(x, y)),
          "x→y = ⊤ and y→x = ⊤ imply x = y"),
)

BCK_AXIOM = Axiom("BCK", 1, lambda c, x: c.le(x, c.top), "x→⊤ = ⊤")

BCK_CRITERION = Axiom(
    "BCK-criterion", 1,
    lambda c, x: exists(c.size, x, lambda y: c.le(y, x) & c.le(y, c.top)),
    "for every x some y has y ⪯ x and y ⪯ ⊤",
)

PROPERTIES_A: Tuple[Axiom, ...] = (
    Axiom("A-1", 1, lambda c, x: implies(c.le(c.top, x), c.same(x, c.top)), "⊤ ⪯ x implies x = ⊤"),
    Axiom("A-2", 3, lambda c, x, y, z: implies(c.le(x, y), c.le(c.arrow(y, z), c.arrow(x, z))),
          "x ⪯ y implies y→z ⪯ x→z"),
    Axiom("A-3", 3, lambda c, x, y, z: implies(c.le(x, y), c.le(c.arrow(z, x), c.arrow(z, y))),
          "x ⪯ y implies z→x ⪯ z→y"),
    Axiom("A-4", 3, lambda c, x, y, z: implies(c.le(x, y) & c.le(y, z), c.le(x, z)),
          "⪯ is transitive"),
    Axiom("A-5", 3, lambda c, x, y, z: c.eq(c.arrow(x, c.arrow(y, z)), c.arrow(y, c.arrow(x, z))),
          "x→(y→z) = y→(x→z)"),
    Axiom("A-6", 3, lambda c, x, y, z: implies(c.le(x, c.arrow(y, z)), c.le(y, c.arrow(x, z))),
          "x ⪯ y→z implies y ⪯ x→z"),
    Axiom("A-7", 3, lambda c, x, y, z: c.le(c.arrow(x, y), c.arrow(c.arrow(z, x), c.arrow(z, y))),
          "x→y ⪯ (z→x)→(z→y)"),
    Axiom("A-8", 1, lambda c, x: c.eq(c.arrow(c.top, x), x), "⊤→x = x"),
    Axiom("A-9", 2, lambda c, x, y: c.eq(c.arrow(c.arrow(c.arrow(y, x), x), x), c.arrow(y, x)),
          "((y→x)→x)→x = y→x"),
    Axiom("A-10", 2, lambda c, x, y: c.le(c.arrow(x, y), c.arrow(c.arrow(y, x), c.top)),
          "x→y ⪯ (y→x)→⊤"),
    Axiom("A-11", 2, lambda c, x, y: c.eq(c.arrow(c.arrow(x, y), c.top),
                                          c.arrow(c.arrow(x, c.top), c.arrow(y, c.top))),
          "(x→y)→⊤ = (x→⊤)→(y→⊤)"),
)


def check_bci(alg: FiniteAlgebra, max_size: int = MAX_CHECK_SIZE) -> AxiomReport:
    return run_axioms("BCI", FiniteContext(alg, max_size=max_size), BCI_AXIOMS)


def check_bck(alg: FiniteAlgebra) -> AxiomReport:
    report = run_axioms("BCK", FiniteContext(alg), (BCK_AXIOM,))
    report.facts["bci"] = check_bci(alg).passed
    return report


def check_bck_criterion(alg: FiniteAlgebra) -> AxiomReport:
    ctx = FiniteContext(alg)
    criterion = evaluate(ctx, BCK_CRITERION)
    bck = evaluate(ctx, BCK_AXIOM)
    report = AxiomReport("BCK-criterion", [criterion])
    report.facts["bci"] = check_bci(alg).passed
    report.facts["bck"] = bck.holds
    report.facts["agreement"] = criterion.holds == bck.holds
    return report


def check_properties_a(alg: FiniteAlgebra) -> AxiomReport:
    return run_axioms("A", FiniteContext(alg), PROPERTIES_A)


IMPLICATIVE_AXIOMS: Tuple[Axiom, ...] = (
    Axiom("i-1", 1, BCI_AXIOMS[2].law, "x→x = ⊤"),
    Axiom("i-2", 3, PROPERTIES_A[3].law, "⪯ is transitive"),
    Axiom("i-3", 2, BCI_AXIOMS[3].law, "⪯ is antisymmetric"),
)


def check_implicative(alg: FiniteAlgebra) -> AxiomReport:
    """x→x = ⊤, transitivity and antisymmetry of the derived order."""
    return run_axioms("implicative", FiniteContext(alg), IMPLICATIVE_AXIOMS)


def first_failure(report: AxiomReport) -> Verdict:
    failures = report.failures()
    if not failures:
        raise ValueError(f"{report.system} report has no failing verdict")
    return failures[0]
