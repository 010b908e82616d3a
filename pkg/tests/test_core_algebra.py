import numpy as np
import pytest
from hypothesis import given, settings

from source.CoreAlgebra import (
    CHECKERS, PBCI_AXIOMS, FiniteAlgebra, FiniteContext, check_bci, check_bck, check_lemma_ord, check_pbci,
    check_properties_a, check_sbci, check_sbci_derived, check_way_below, compute_meet, derive_relation,
    from_star_form, holds_at, labelled, meet_of, parse_systems, relations_coincide, to_star_form,
)
from source.ErrorHandling import (
    AbsentOperationError, InvalidAlgebraError, NotAPartialOrderError, PreconditionViolation, SizeCapExceeded,
    UnknownSystemError,
)
from tests.conftest import algebras


class TestFiniteAlgebra:
    def test_rejects_out_of_range_entries(self):
        with pytest.raises(InvalidAlgebraError):
            FiniteAlgebra(size=2, top=1, arrow=[[1, 2], [0, 1]])

    def test_rejects_bad_top(self):
        with pytest.raises(InvalidAlgebraError):
            FiniteAlgebra(size=2, top=2, arrow=[[1, 1], [0, 1]])

    def test_missing_double_arrow_reads_arrow(self, two_chain):
        assert np.array_equal(two_chain.double, two_chain.arrow)
        with pytest.raises(AbsentOperationError):
            two_chain.table("double_arrow")

    def test_labels(self, powerset):
        assert labelled(powerset, (3, 0)) == ("{a,b}", "{}")


class TestBCI:
    def test_powerset_is_bci_and_bck(self, powerset):
        assert check_bci(powerset).passed
        bck = check_bck(powerset)
        assert bck.passed
        assert bck.facts["bci"]

    def test_powerset_properties_a(self, powerset):
        assert check_properties_a(powerset).passed

    def test_one_element_passes_every_checker(self, one_element):
        for name, checker in CHECKERS.items():
            assert checker(one_element).passed, name

    def test_failure_reports_first_witness(self):
        alg = FiniteAlgebra(size=2, top=1, arrow=[[0, 1], [0, 1]])
        verdict = check_bci(alg).verdict("C-3")
        assert not verdict.holds
        assert verdict.witness == (0,)

    def test_bck_criterion_agrees_on_powerset(self, powerset):
        report = CHECKERS["bck-criterion"](powerset)
        assert report.facts["agreement"]

    def test_checker_size_cap(self):
        size = 17
        with pytest.raises(SizeCapExceeded):
            FiniteContext(FiniteAlgebra(size=size, top=0, arrow=np.zeros((size, size), dtype=int)))

    @settings(max_examples=200, deadline=None)
    @given(algebras(max_size=3))
    def test_bci_implies_properties_a(self, alg):
        if check_bci(alg).passed:
            assert check_properties_a(alg).passed
            assert derive_relation(alg).is_partial_order


class TestTwoOperations:
    def test_godel_fodor_chain_is_sbci_but_not_pbci(self, godel_fodor):
        assert check_sbci(godel_fodor).passed
        assert not check_pbci(godel_fodor).passed

    def test_godel_fodor_pb2_fails_at_known_point(self, godel_fodor):
        pb2 = next(axiom for axiom in PBCI_AXIOMS if axiom.name == "PB-2")
        assert not holds_at(FiniteContext(godel_fodor), pb2, (4, 3, 1))
        assert labelled(godel_fodor, (4, 3, 1)) == ("3/4", "1/2", "1/5")

    def test_sbci_not_pbci_model(self, sbci_not_pbci):
        assert check_sbci(sbci_not_pbci).passed
        assert not check_pbci(sbci_not_pbci).verdict("PB-7").holds

    def test_coincidence_flags_agree(self, sbci_not_pbci):
        report = relations_coincide(sbci_not_pbci)
        assert report.passed
        assert not report.facts["reflexive"]
        assert not report.facts["coincide"]

    @settings(max_examples=200, deadline=None)
    @given(algebras(max_size=2, two_operation=True))
    def test_sbci_implies_derived_laws(self, alg):
        if check_sbci(alg).passed:
            assert check_sbci_derived(alg).passed


class TestOrderAndMeet:
    def test_two_chain_meet(self, two_chain):
        meet = meet_of(two_chain)
        assert meet.present
        assert meet.meet.tolist() == [[0, 0], [0, 1]]

    def test_powerset_meet_is_union(self, powerset):
        # the order is reverse inclusion, so the meet of {a} and {b} is {a,b}
        assert meet_of(powerset).meet[1, 2] == 3

    def test_not_a_partial_order(self):
        alg = FiniteAlgebra(size=2, top=0, arrow=[[0, 0], [0, 0]])
        with pytest.raises(NotAPartialOrderError) as error:
            compute_meet(derive_relation(alg))
        assert "antisymmetric" in error.value.failing_flags

    def test_missing_meet(self):
        # two incomparable elements below a top, nothing below them
        alg = FiniteAlgebra(size=3, top=2, arrow=[[2, 0, 2], [1, 2, 2], [0, 1, 2]])
        meet = meet_of(alg)
        assert not meet.present
        assert meet.witness == (0, 1)

    def test_star_form_is_the_transpose(self, powerset):
        star = to_star_form(powerset)
        assert np.array_equal(star.arrow, powerset.arrow.T)
        assert from_star_form(star) == powerset

    def test_star_form_needs_single_operation(self, sbci_not_pbci):
        with pytest.raises(PreconditionViolation):
            to_star_form(sbci_not_pbci)


class TestLatticeCheckers:
    def test_lukasiewicz_chain_fails_condition_star(self, lukasiewicz_three):
        assert not CHECKERS["condition-star"](lukasiewicz_three).passed
        assert CHECKERS["distributivity"](lukasiewicz_three).passed

    def test_godel_chain_satisfies_condition_star(self, godel_three):
        assert CHECKERS["condition-star"](godel_three).passed

    def test_perturbed_fixture_fails_distributivity(self, perturbed):
        assert meet_of(perturbed).present
        assert not CHECKERS["distributivity"](perturbed).passed

    def test_powerset_is_distributive(self, powerset):
        assert CHECKERS["distributivity"](powerset).passed
        assert CHECKERS["condition-star"](powerset).passed

    def test_lemma_ord_on_powerset(self, powerset):
        report = CHECKERS["lemma-ord"](powerset)
        assert report.passed
        assert report.facts["condition_star"]
        assert report.verdict("lemma-ord-two").holds

    def test_lemma_ord_on_godel_chain(self, godel_three):
        report = check_lemma_ord(godel_three, meet_of(godel_three))
        assert report.passed
        assert len(report.verdicts) == 3

    def test_lemma_ord_skips_the_second_lemma_without_condition_star(self, lukasiewicz_three):
        report = CHECKERS["lemma-ord"](lukasiewicz_three)
        assert report.passed
        assert not report.facts["condition_star"]
        assert "lemma_ord_two" in report.facts
        assert [v.axiom for v in report.verdicts] == ["lemma-ord-meet", "lemma-ord-lower"]


class TestWayBelow:
    def test_single_operation_algebra(self, powerset):
        report = check_way_below(powerset)
        assert report.passed
        assert report.facts["smallest"] == 3
        assert len(report.verdicts) == 3

    def test_least_element_not_way_below_itself(self, sbci_not_pbci):
        report = check_way_below(sbci_not_pbci)
        assert report.verdict("way-below-1").holds
        assert report.verdict("way-below-2").holds
        verdict = report.verdict("way-below-3")
        assert not verdict.holds
        assert verdict.witness == (0,)

    def test_no_least_element(self):
        # 0 and 1 incomparable under the top
        alg = FiniteAlgebra(size=3, top=2, arrow=[[2, 0, 2], [1, 2, 2], [0, 1, 2]])
        report = check_way_below(alg)
        assert report.facts["smallest"] is None
        assert len(report.verdicts) == 2


class TestRegistry:
    def test_parse_systems(self):
        assert parse_systems("bci, BCK") == ("bci", "bck")

    def test_unknown_system(self):
        with pytest.raises(UnknownSystemError):
            parse_systems("bci,frobnicate")
