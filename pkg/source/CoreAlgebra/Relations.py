from typing import Optional, Tuple

import numpy as np

from source.CoreAlgebra.Engine import Axiom, AxiomContext, FiniteContext, evaluate, implies, run_axioms
from source.CoreAlgebra.Structures import AxiomReport, FiniteAlgebra, MeetStructure, RelationMatrix, Verdict
from source.ErrorHandling import NotAPartialOrderError, PreconditionViolation


def derive_relation(alg: FiniteAlgebra, which: str = "arrow") -> RelationMatrix:
    table = alg.table(which)
    return RelationMatrix(alg.size, table == alg.top)


def to_star_form(alg: FiniteAlgebra) -> FiniteAlgebra:
    """x∗y := y→x; the top index becomes the bottom of the ∗-form."""
    if alg.is_two_operation:
        raise PreconditionViolation("to_star_form", "single-operation")
    return alg.replace(arrow=alg.arrow.T)


def from_star_form(alg: FiniteAlgebra) -> FiniteAlgebra:
    if alg.is_two_operation:
        raise PreconditionViolation("from_star_form", "single-operation")
    return alg.replace(arrow=alg.arrow.T)


def compute_meet(rel: RelationMatrix) -> MeetStructure:
    if not rel.is_partial_order:
        raise NotAPartialOrderError("compute_meet", rel.failing_flags())
    le = rel.rel
    # lower[x, y, z]: z ⪯ x and z ⪯ y
    lower = le.T[:, None, :] & le.T[None, :, :]
    dominates = np.all(~lower[:, :, :, None] | le[None, None, :, :], axis=2)
    glb = lower & dominates
    has_glb = glb.any(axis=2)
    if not has_glb.all():
        witness = tuple(int(i) for i in np.argwhere(~has_glb)[0])
        return MeetStructure(None, witness)
    meet = glb.argmax(axis=2).astype(np.intp)
    meet.setflags(write=False)
    return MeetStructure(meet)


def meet_of(alg: FiniteAlgebra) -> MeetStructure:
    return compute_meet(derive_relation(alg, "arrow"))


def coincidence_report(ctx: AxiomContext, system: str = "coincide", mode: str = "exhaustive") -> AxiomReport:
    """
    ≪ reflexive, ≪ = ⪯, and whether those two flags agree. Only the agreement is a verdict.
    """
    reflexive = evaluate(ctx, Axiom("≪-reflexive", 1, lambda c, x: c.ll(x, x)))
    coincide = evaluate(ctx, Axiom("≪=⪯", 2, lambda c, x, y: np.equal(c.ll(x, y), c.le(x, y))))
    agreement = Verdict("reflexive-iff-coincide", reflexive.holds == coincide.holds,
                        reflexive.witness or coincide.witness if reflexive.holds != coincide.holds else ())
    report = AxiomReport(system, [agreement], mode=mode)
    report.facts["reflexive"] = reflexive.holds
    report.facts["coincide"] = coincide.holds
    report.facts["equivalent"] = agreement.holds
    if not reflexive.holds:
        report.facts["reflexive_witness"] = list(reflexive.witness)
    if not coincide.holds:
        report.facts["coincide_witness"] = list(coincide.witness)
    return report


def relations_coincide(alg: FiniteAlgebra) -> AxiomReport:
    return coincidence_report(FiniteContext(alg))


def smallest_element(rel: RelationMatrix) -> Optional[int]:
    below_all = np.flatnonzero(rel.rel.all(axis=1))
    return int(below_all[0]) if below_all.size else None


def check_way_below(alg: FiniteAlgebra) -> AxiomReport:
    """
    The three way-below properties of the pair (≪, ⪯), each reported on its own.
    """
    smallest = smallest_element(derive_relation(alg, "arrow"))
    axioms: Tuple[Axiom, ...] = (
        Axiom("way-below-1", 2, lambda c, x, y: implies(c.ll(x, y), c.le(x, y)),
              "x ≪ y implies x ⪯ y"),
        Axiom("way-below-2", 4, lambda c, u, x, y, z: implies(c.le(u, x) & c.ll(x, y) & c.le(y, z), c.ll(u, z)),
              "u ⪯ x ≪ y ⪯ z implies u ≪ z"),
    )
    report = run_axioms("way-below", FiniteContext(alg), axioms)
    if smallest is not None:
        report.verdicts.append(evaluate(
            FiniteContext(alg),
            Axiom("way-below-3", 1, lambda c, x: c.ll(smallest, x), "the least element is way below every x"),
        ))
    report.facts["smallest"] = smallest
    return report
