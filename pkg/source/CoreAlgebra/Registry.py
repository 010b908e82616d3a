from types import MappingProxyType
from typing import Callable, Iterable, List, Tuple

from source.CoreAlgebra.Axioms import check_bci, check_bck, check_bck_criterion, check_implicative, check_properties_a
from source.CoreAlgebra.Lattice import check_condition_star, check_lemma_ord, check_meet_distributivity
from source.CoreAlgebra.PseudoBCI import check_pbci
from source.CoreAlgebra.Relations import check_way_below, derive_relation, compute_meet, relations_coincide
from source.CoreAlgebra.SemiBCI import check_sbci, check_sbci_derived, check_sbck
from source.CoreAlgebra.Structures import AxiomReport, FiniteAlgebra, Verdict
from source.ErrorHandling import NotAPartialOrderError, UnknownSystemError

Checker = Callable[[FiniteAlgebra], AxiomReport]


def _with_meet(system: str, check) -> Checker:
    """Checkers that need ∧ report a failing 'meet' verdict when the order has none."""
    def run(alg: FiniteAlgebra) -> AxiomReport:
        rel = derive_relation(alg, "arrow")
        try:
            meet = compute_meet(rel)
        except NotAPartialOrderError as e:
            flag = e.failing_flags[0]
            return AxiomReport(system, [Verdict(f"partial-order:{flag}", False, rel.witnesses[flag])])
        if not meet.present:
            return AxiomReport(system, [Verdict("meet", False, meet.witness)])
        return check(alg, meet)
    return run


CHECKERS = MappingProxyType({
    "bci": check_bci,
    "bck": check_bck,
    "bck-criterion": check_bck_criterion,
    "properties-a": check_properties_a,
    "implicative": check_implicative,
    "sbci": check_sbci,
    "sbci-derived": check_sbci_derived,
    "sbck": check_sbck,
    "pbci": check_pbci,
    "condition-star": _with_meet("condition-star", check_condition_star),
    "distributivity": _with_meet("distributivity", check_meet_distributivity),
    "lemma-ord": _with_meet("lemma-ord", check_lemma_ord),
    "coincide": relations_coincide,
    "way-below": check_way_below,
})

# systems whose laws mention the double arrow
TWO_OPERATION_SYSTEMS = frozenset({"sbci", "sbci-derived", "sbck", "pbci", "coincide", "way-below"})


def parse_systems(text: str) -> Tuple[str, ...]:
    names = tuple(name.strip().lower() for name in text.split(",") if name.strip())
    validate_systems(names)
    return names


def validate_systems(names: Iterable[str]):
    for name in names:
        if name not in CHECKERS:
            raise UnknownSystemError(name, CHECKERS.keys())


def run_checkers(alg: FiniteAlgebra, names: Iterable[str]) -> List[AxiomReport]:
    names = tuple(names)
    validate_systems(names)
    return [CHECKERS[name](alg) for name in names]


def all_pass(alg: FiniteAlgebra, names: Iterable[str]) -> bool:
    """Conjunction with early exit."""
    for name in names:
        if not CHECKERS[name](alg).passed:
            return False
    return True
