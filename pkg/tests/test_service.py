import asyncio

import pytest

from source import run_toolkit
from source.Cli import cmd_search, parse_algebra, parse_machine, render_algebra, render_text
from source.Database import CatalogHelper
from source.ModelSearch import SearchTask
from tests.conftest import CONFIG, fixture_path, godel_chain


def run(*argv: str) -> int:
    return asyncio.run(run_toolkit(["--config", str(CONFIG), *argv]))


def test_check_passes(capsys):
    assert run("check", fixture_path("powerset-of-2"), "bci,bck") == 0
    assert capsys.readouterr().out.endswith("result: pass\n")


def test_check_fails(capsys):
    assert run("check", fixture_path("godel-fodor-chain"), "pbci") == 1
    assert "result: fail" in capsys.readouterr().out


def test_unknown_system_is_a_usage_error():
    assert run("check", fixture_path("powerset-of-2"), "frobnicate") == 2


def test_missing_file_is_a_usage_error(tmp_path):
    assert run("check", str(tmp_path / "absent.alg"), "bci") == 2


def test_parse_error_is_a_usage_error(tmp_path):
    path = tmp_path / "broken.alg"
    path.write_text("n 2 top 1\narrow:\n1 1\n0 9\n")
    assert run("check", str(path), "bci") == 2


def test_missing_command_is_a_usage_error():
    assert run() == 2


def test_intervalize_writes_the_interval_algebra(tmp_path):
    out = tmp_path / "powerset-intervals.alg"
    assert run("intervalize", fixture_path("powerset-of-2"), "--out", str(out), "--verify") == 0
    interval = parse_algebra(out.read_text())
    assert interval.size == 9
    assert interval.is_two_operation


def test_intervalize_gate_failure(capsys):
    assert run("intervalize", fixture_path("perturbed-distributivity")) == 1
    assert "distributivity" in capsys.readouterr().err


def test_intervalize_verify_beyond_the_finite_checker_cap(tmp_path, capsys):
    path = tmp_path / "godel-six.alg"
    path.write_text(render_algebra(godel_chain(6)))
    assert run("intervalize", str(path), "--verify") == 0
    assert "result: pass" in capsys.readouterr().out


def test_search_cap_is_a_usage_error():
    assert run("search", "6", "--require", "bci") == 2


def test_search_bad_top_is_a_usage_error():
    assert run("search", "2", "--require", "bci", "--top", "5") == 2


def test_machine_format(capsys):
    assert run("--format", "machine", "search", "1", "--require", "bci") == 0
    report = parse_machine(capsys.readouterr().out)
    assert report.notes["count"] == 1
    assert len(report.models) == 1


def test_output_is_deterministic(capsys):
    run("check", fixture_path("powerset-of-2"), "bci,properties-a")
    first = capsys.readouterr().out
    run("check", fixture_path("powerset-of-2"), "bci,properties-a")
    assert capsys.readouterr().out == first


def test_unknown_demo_is_a_usage_error():
    assert run("demo", "nope") == 2


def test_demo(capsys):
    assert run("--grid", "21", "demo", "markov") == 0
    assert "0.4" in capsys.readouterr().out


def test_intersection():
    assert run("intersection", "2") == 0


def test_catalog_records_models(tmp_path):
    url = f"sqlite:///{tmp_path / 'models.db'}"
    assert run("search", "2", "--require", "bci", "--catalog", url) == 0

    async def load():
        catalog = CatalogHelper(url)
        runs = catalog.get_all_runs()
        return runs, catalog.load_models(runs[0][0])

    runs, models = asyncio.run(load())
    assert len(runs) == 1
    assert runs[0][3] == len(models) > 0


@pytest.mark.parametrize("argv, task", [
    (("search", "2", "--require", "sbci"), SearchTask(2, ("sbci",))),
    (("search", "3", "--require", "bci", "--limit", "2"), SearchTask(3, ("bci",), limit=2)),
])
def test_streamed_search_matches_the_buffered_report(argv, task, capsys):
    assert run(*argv) == 0
    streamed = capsys.readouterr().out
    _, report, result = cmd_search(task)
    assert streamed == render_text(report)
    assert streamed.count("---\n") == result.count
