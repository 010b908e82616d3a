import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from source.CoreAlgebra import SBCI_AXIOMS, holds_at
from source.ContinuousExamples import (
    FD, GD, IMPLICATIONS, LK, R, WB, YG, GridContext, GridSpec, PlaneAlgebra, RealInterval, chain_restriction,
    counterexample, get_implication, grid_axioms, grid_check, known_counterexamples, markov_sub, moore_ops,
    order_property_check, plane_check, probe, real_interval_implication, sampled_correctness, sbci1_difference,
    verify_counterexample,
)
from source.ContinuousExamples.Counterexamples import counterexample_report
from source.ContinuousExamples.IntervalArithmetic import lk_interval_report
from source.Cli.AlgebraFile import load_algebra
from source.Cli.Commands import GODEL_FODOR_CHAIN, GODEL_FODOR_LABELS
from source.ErrorHandling import (
    GridSpecError, IntervalDivisionError, InvalidAlgebraError, InvalidIntervalError, UnknownSystemError,
)
from tests.conftest import fixture_path

GRID = GridSpec(21)
SUITE = GridSpec(101, 1e-9)
SBCI12 = grid_axioms(["SBCI12"])[0]
SBCI7 = grid_axioms(["SBCI7"])[0]
PB2 = grid_axioms(["PB-2"])[0]

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
bounded = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)


@st.composite
def intervals(draw, values=bounded) -> RealInterval:
    a, b = draw(values), draw(values)
    return RealInterval(min(a, b), max(a, b))


class TestImplications:
    def test_known_values(self):
        assert LK(0.3, 0.5) == 1.0
        assert R(0.5, 0.5) == pytest.approx(0.75)
        assert GD(0.5, 0.25) == 0.25
        assert FD(0.75, 0.5) == 0.5
        assert YG(0.0, 0.0) == 1.0
        assert WB(0.5, 0.3) == 1.0
        assert YG(0.3, 0.5) == pytest.approx(0.81225, abs=5e-5)

    def test_lookup(self):
        assert get_implication("LK") is LK
        with pytest.raises(UnknownSystemError):
            get_implication("nope")

    @given(unit, unit)
    def test_lukasiewicz_stays_in_the_unit_interval(self, x, y):
        assert 0.0 <= float(LK(x, y)) <= 1.0

    @pytest.mark.parametrize("impl", list(IMPLICATIONS.values()), ids=list(IMPLICATIONS))
    def test_grid_values_stay_in_the_unit_interval(self, impl):
        x, y = np.meshgrid(SUITE.values, SUITE.values, indexing="ij")
        values = impl(x, y)
        assert np.all(values >= -SUITE.tolerance)
        assert np.all(values <= 1.0 + SUITE.tolerance)

    def test_reichenbach_is_top_only_on_the_edges(self):
        x, y = np.meshgrid(SUITE.values, SUITE.values, indexing="ij")
        top = np.abs(R(x, y) - 1.0) <= SUITE.tolerance
        edges = (x <= SUITE.tolerance) | (y >= 1.0 - SUITE.tolerance)
        assert np.array_equal(top, edges)


class TestGrid:
    def test_spec_validation(self):
        with pytest.raises(GridSpecError):
            GridSpec(1)
        with pytest.raises(GridSpecError):
            GridSpec(11, 0.0)

    def test_reichenbach_lukasiewicz_is_sbci(self):
        report = grid_check(R, LK, SBCI_AXIOMS, GRID)
        assert report.passed
        assert report.mode == "sampled"
        assert report.status(report.verdicts[0]) == "sampled-pass"

    def test_godel_fodor_is_sbci_and_fails_pb2(self):
        report = grid_check(GD, FD, SBCI_AXIOMS, GRID, negative=[PB2])
        assert report.passed
        assert not report.verdict("PB-2").holds

    def test_godel_fodor_pb2_at_the_known_point(self):
        ctx = GridContext(GD, FD, GRID)
        verdict = probe(ctx, PB2, (0.75, 0.5, 0.2),
                        lambda c, x, y, z: {"lhs": c.arrow(x, y), "rhs": c.double(c.arrow(y, z), c.arrow(x, z))})
        assert not verdict.holds
        assert verdict.values["lhs"] == pytest.approx(0.5, abs=1e-12)
        assert verdict.values["rhs"] == pytest.approx(0.25, abs=1e-12)

    def test_yager_fails_sbci12(self):
        ctx = GridContext(YG, YG, GRID)
        report = grid_check(YG, YG, (), GRID, negative=[SBCI12])
        assert report.passed
        assert not holds_at(ctx, SBCI12, (0.5,))

    def test_weber_fails_antisymmetry(self):
        ctx = GridContext(WB, WB, GRID)
        assert not grid_check(WB, WB, [SBCI7], GRID).passed
        assert not holds_at(ctx, SBCI7, (0.5, 0.3))

    def test_order_property(self):
        assert order_property_check(GD, GRID).passed
        assert order_property_check(FD, GRID).passed
        yager = order_property_check(YG, GRID)
        assert not yager.verdict("order-forward").holds

    @pytest.mark.parametrize("double, arrow", [(R, LK), (GD, FD)], ids=["R-LK", "GD-FD"])
    def test_sbci_at_full_resolution(self, double, arrow):
        report = grid_check(double, arrow, SBCI_AXIOMS, SUITE)
        assert report.passed
        assert len(report.verdicts) == len(SBCI_AXIOMS)

    def test_counterexamples_at_full_resolution(self):
        assert not holds_at(GridContext(YG, YG, SUITE), SBCI12, (0.5,))
        assert not holds_at(GridContext(WB, WB, SUITE), SBCI7, (0.5, 0.3))
        assert not grid_check(GD, FD, [PB2], SUITE).passed

    def test_axiom_lookup(self):
        assert len(grid_axioms(["sbci"])) == 7
        with pytest.raises(UnknownSystemError):
            grid_axioms(["SBCI99"])


class TestRestriction:
    def test_godel_fodor_chain_matches_fixture(self):
        chain = chain_restriction(GD, FD, GODEL_FODOR_CHAIN, GODEL_FODOR_LABELS)
        assert chain == load_algebra(fixture_path("godel-fodor-chain"))

    def test_chain_must_be_closed(self):
        with pytest.raises(InvalidAlgebraError):
            chain_restriction(None, FD, (0.0, 0.3, 1.0))

    def test_chain_must_contain_one(self):
        with pytest.raises(InvalidAlgebraError):
            chain_restriction(None, GD, (0.0, 0.5))


class TestPlane:
    def test_pbci_but_not_exchange(self):
        report = plane_check(resolution=7, triple_resolution=5)
        assert report.passed
        assert not report.verdict("SBCI1").holds

    def test_exchange_gap_at_the_known_point(self):
        plane = PlaneAlgebra()
        p, q, r = np.array([1.0, 0.0]), np.array([0.0, 1.0]), np.array([0.0, 0.0])
        left = plane.double(p, plane.double(q, r))
        right = plane.double(q, plane.double(p, r))
        assert left[1] == pytest.approx(-math.exp(-1.0))
        assert right[1] == pytest.approx(-1.0)
        assert sbci1_difference(p, q, r) != 0


class TestRealIntervals:
    def test_invalid_interval(self):
        with pytest.raises(InvalidIntervalError):
            RealInterval(1.0, 0.0)

    def test_division_by_zero_interval(self):
        with pytest.raises(IntervalDivisionError):
            RealInterval(1.0, 2.0) / RealInterval(-1.0, 1.0)

    def test_markov_subtraction(self):
        x = RealInterval(2.0, 3.0)
        assert markov_sub(x, x) == RealInterval(0.0, 0.0)
        assert not markov_sub(x, x).contains(2.5 - 2.1)
        assert (x - x) == RealInterval(-1.0, 1.0)

    @given(intervals(), intervals(), st.floats(0, 1), st.floats(0, 1), st.sampled_from(["+", "-", "*"]))
    def test_moore_operations_contain_pointwise_results(self, x, y, s, t, op):
        a = x.lo + s * x.width
        b = y.lo + t * y.width
        a, b = min(max(a, x.lo), x.hi), min(max(b, y.lo), y.hi)
        value = {"+": a + b, "-": a - b, "*": a * b}[op]
        assert moore_ops(x, y, op).contains(value, tolerance=1e-9 * (1 + abs(value)))

    @settings(deadline=None)
    @given(intervals(unit), intervals(unit))
    def test_lukasiewicz_interval_implication_is_correct(self, x, y):
        best, km = real_interval_implication(x, y)
        assert sampled_correctness(x, y, samples=7) is None
        assert best.lo <= km.lo + 1e-12

    def test_implication_needs_unit_intervals(self):
        with pytest.raises(InvalidIntervalError):
            real_interval_implication(RealInterval(0.0, 2.0), RealInterval(0.0, 1.0))

    def test_lukasiewicz_report(self):
        report = lk_interval_report(samples=50)
        assert report.passed
        assert report.facts["[0,0]=>[1,1]"] == "[1, 1]"


class TestCounterexamples:
    @pytest.mark.parametrize("entry", known_counterexamples(), ids=lambda entry: entry.name)
    def test_recomputes(self, entry):
        assert verify_counterexample(entry).holds

    def test_report(self):
        report = counterexample_report()
        assert report.passed
        assert len(report.verdicts) == len(known_counterexamples())

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            counterexample("nope")
