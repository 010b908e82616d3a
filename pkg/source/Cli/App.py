import argparse
from typing import List, Optional, Sequence

from source.ContinuousExamples import GridSpec
from source.ContinuousExamples.Counterexamples import EXACT_TOLERANCE
from source.CoreAlgebra.Registry import CHECKERS
from source.DynamicConfigurationLoading import DotDict, section
from source.Cli.Commands import DEMOS, RunSettings
from source.Cli.Reports import FORMATS


class ArgumentError(Exception):
    pass


class ToolkitArgumentParser(argparse.ArgumentParser):
    """Usage errors surface as ArgumentError so the service can map them to exit code 2."""

    def error(self, message):
        raise ArgumentError(message)


def _names(text: str) -> List[str]:
    return [name.strip().lower() for name in text.split(",") if name.strip()]


def build_parser() -> ToolkitArgumentParser:
    parser = ToolkitArgumentParser(prog="bci-toolkit", description="BCI, SBCI and PBCI algebra toolkit")
    parser.add_argument("--config", default=None, help="configuration file (default: config.yaml)")
    parser.add_argument("--grid", type=int, default=None, help="grid resolution for sampled checks")
    parser.add_argument("--tol", type=float, default=None, help="sampled equality tolerance")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--timings", action="store_true", help="add wall-clock seconds per section")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ToolkitArgumentParser)

    check = commands.add_parser("check", help="run checkers on an algebra file")
    check.add_argument("path")
    check.add_argument("systems", type=_names, help="comma-separated, one of: " + ", ".join(CHECKERS))

    intervalize = commands.add_parser("intervalize", help="build the interval algebra of a base algebra")
    intervalize.add_argument("path")
    intervalize.add_argument("--out", default=None)
    intervalize.add_argument("--verify", action="store_true")

    search = commands.add_parser("search", help="enumerate models of a given size")
    search.add_argument("n", type=int)
    search.add_argument("--require", type=_names, required=True)
    search.add_argument("--forbid", type=_names, default=[])
    search.add_argument("--limit", type=int, default=0)
    search.add_argument("--top", type=int, default=None)
    search.add_argument("--workers", type=int, default=None)
    search.add_argument("--catalog", default=None, help="SQLAlchemy url to record the run in")

    intersection = commands.add_parser("intersection", help="exhaustive SBCI and PBCI intersection check")
    intersection.add_argument("n", type=int)
    intersection.add_argument("--workers", type=int, default=None)

    demo = commands.add_parser("demo", help="run a continuous or interval example")
    demo.add_argument("name", help="one of: " + ", ".join(DEMOS))
    return parser


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _pick(flag, configured, default):
    if flag is not None:
        return flag
    return default if configured is None else configured


def run_settings(settings: DotDict, args: argparse.Namespace) -> RunSettings:
    """Flags override config.yaml, config.yaml overrides built-in defaults."""
    grid, plane, search = section(settings, "grid"), section(settings, "plane"), section(settings, "search")
    box = plane.box or (-2.0, 2.0)
    return RunSettings(
        grid=GridSpec(int(_pick(args.grid, grid.resolution, 101)), float(_pick(args.tol, grid.tolerance, 1e-9))),
        exact_tolerance=float(_pick(None, grid.exact_tolerance, EXACT_TOLERANCE)),
        plane_box=(float(box[0]), float(box[1])),
        plane_resolution=int(_pick(None, plane.resolution, 21)),
        plane_triple_resolution=int(_pick(None, plane.triple_resolution, 9)),
        workers=int(_pick(getattr(args, "workers", None), search.workers, 1)),
        max_single=int(_pick(None, search.max_single, 5)),
        max_double=int(_pick(None, search.max_double, 4)),
    )
