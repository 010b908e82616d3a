import pytest
from hypothesis import given, settings

from source.Cli import (
    DEMOS, FAIL, PASS, RunSettings, build_parser, cmd_check, cmd_demo, cmd_intersection, cmd_intervalize,
    cmd_search, parse_algebra, parse_machine, render, render_algebra, render_machine, render_text, run_settings,
)
from source.Cli.App import ArgumentError
from source.Cli.Reports import label_witness, to_tree
from source.ContinuousExamples import GridSpec
from source.DynamicConfigurationLoading import DotDict
from source.ErrorHandling import AlgebraParseError, PreconditionViolation, UnknownDemoError, UnknownSystemError
from source.ModelSearch import SearchTask, naive_enumerate
from tests.conftest import algebras

FAST = RunSettings(grid=GridSpec(21), plane_resolution=7, plane_triple_resolution=5)


class TestAlgebraFile:
    def test_parse_with_comments_and_labels(self):
        alg = parse_algebra("# a chain\nn 2 top 1   # header\narrow:\n1 1\n0 1\nlabels:\nlow high\n")
        assert alg.size == 2
        assert alg.labels == ("low", "high")
        assert alg.arrow.tolist() == [[1, 1], [0, 1]]

    def test_two_operations(self, godel_fodor):
        assert godel_fodor.is_two_operation
        assert godel_fodor.label(godel_fodor.top) == "1"

    @pytest.mark.parametrize("fixture", ["one_element", "two_chain", "powerset", "godel_fodor", "perturbed"])
    def test_fixture_round_trip(self, fixture, request):
        alg = request.getfixturevalue(fixture)
        assert parse_algebra(render_algebra(alg, "round trip")) == alg

    @settings(max_examples=50)
    @given(algebras(max_size=4, two_operation=True))
    def test_rendered_algebras_reparse(self, alg):
        assert parse_algebra(render_algebra(alg)) == alg

    def test_out_of_range_entry_position(self):
        with pytest.raises(AlgebraParseError) as error:
            parse_algebra("n 2 top 1\narrow:\n1 1\n0 2\n")
        assert (error.value.line, error.value.column) == (4, 3)

    @pytest.mark.parametrize("text", [
        "",
        "size 2\narrow:\n1 1\n0 1\n",
        "n 2 top 1\n",
        "n 2 top 1\narrow:\n1 1\n",
        "n 2 top 1\narrow:\n1 x\n0 1\n",
        "n 2 top 1\narrow:\n1 1\n0 1\nlabels:\none\n",
        "n 2 top 1\narrow:\n1 1\n0 1\narrow:\n1 1\n0 1\n",
        "n 2 top 1\ntables:\n1 1\n0 1\n",
    ])
    def test_rejects(self, text):
        with pytest.raises(AlgebraParseError):
            parse_algebra(text)


class TestCommands:
    def test_check_powerset(self, powerset):
        code, report = cmd_check(powerset, ["bci", "bck"])
        assert code == PASS
        assert "result: pass" in render_text(report)

    def test_check_godel_fodor_pbci_fails(self, godel_fodor):
        code, report = cmd_check(godel_fodor, ["pbci"])
        assert code == FAIL
        assert "fail" in render_text(report)

    def test_check_labels_witnesses(self, godel_fodor):
        _, report = cmd_check(godel_fodor, ["pbci"])
        section = report.sections[0]
        witness = section.report.failures()[0].witness
        labels = label_witness(witness, section.labels)
        assert set(labels) <= set(godel_fodor.labels)
        assert "at (" + ", ".join(labels) + ")" in render_text(report)

    def test_check_unknown_system(self, powerset):
        with pytest.raises(UnknownSystemError):
            cmd_check(powerset, ["bci", "frobnicate"])

    def test_intervalize_powerset(self, powerset):
        code, report, interval = cmd_intervalize(powerset, verify=True)
        assert code == PASS
        assert interval.size == 9
        assert report.notes["intervals"] == 9

    def test_intervalize_one_element(self, one_element):
        code, _, interval = cmd_intervalize(one_element)
        assert code == PASS
        assert interval.size == 1

    def test_intervalize_gate(self, perturbed):
        with pytest.raises(PreconditionViolation) as error:
            cmd_intervalize(perturbed)
        assert error.value.gate == "distributivity"

    def test_search(self):
        task = SearchTask(2, ("bci",))
        code, report, result = cmd_search(task)
        assert code == PASS
        assert result.count == naive_enumerate(task).count
        assert report.notes["count"] == result.count
        assert len(report.models) == result.count

    def test_search_two_operations_labels_regions(self):
        _, report, _ = cmd_search(SearchTask(2, ("sbci",)))
        assert all(model.startswith("# region: ") for model in report.models)

    def test_intersection(self):
        code, report = cmd_intersection(2, FAST)
        assert code == PASS
        assert report.sections[0].report.facts["violations"] == 0

    @pytest.mark.parametrize("name", list(DEMOS))
    def test_demos(self, name):
        code, report = cmd_demo(name, FAST)
        assert code == PASS, render_text(report)

    def test_markov_demo_prints_the_excluded_point(self):
        _, report = cmd_demo("markov", FAST)
        text = render_text(report)
        assert "[0, 0]" in text
        assert "0.4" in text

    def test_yager_demo_prints_the_value(self):
        _, report = cmd_demo("yager", FAST)
        assert "0.8122" in render_text(report)

    def test_unknown_demo(self):
        with pytest.raises(UnknownDemoError):
            cmd_demo("nope")


class TestReports:
    def test_text_is_deterministic(self, powerset):
        first = render_text(cmd_check(powerset, ["bci", "properties-a"])[1])
        second = render_text(cmd_check(powerset, ["bci", "properties-a"])[1])
        assert first == second

    def test_timings_only_on_request(self, powerset):
        _, report = cmd_check(powerset, ["bci"])
        assert all("seconds" not in section for section in to_tree(report)["sections"])
        assert all("seconds" in section for section in to_tree(report, timings=True)["sections"])

    def test_machine_round_trip(self, godel_fodor):
        _, report = cmd_check(godel_fodor, ["sbci", "pbci"])
        assert to_tree(parse_machine(render_machine(report))) == to_tree(report)

    def test_negative_verdicts_are_marked(self):
        _, report = cmd_demo("weber", FAST)
        assert "(expected)" in render(report, "text")


class TestArguments:
    def test_check_arguments(self):
        args = build_parser().parse_args(["--grid", "11", "check", "a.alg", "bci,BCK"])
        assert args.systems == ["bci", "bck"]
        assert args.grid == 11

    def test_missing_command(self):
        with pytest.raises(ArgumentError):
            build_parser().parse_args([])

    def test_flags_override_config(self):
        args = build_parser().parse_args(["--tol", "1e-6", "demo", "weber"])
        config = DotDict({"grid": {"resolution": 51, "tolerance": 1e-9}, "search": {"workers": 3}})
        settings = run_settings(config, args)
        assert settings.grid == GridSpec(51, 1e-6)
        assert settings.workers == 3
        assert settings.plane_box == (-2.0, 2.0)
