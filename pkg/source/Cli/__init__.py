from source.Cli.AlgebraFile import parse_algebra, render_algebra, load_algebra, read_algebra, write_algebra
from source.Cli.Reports import (
    Report, Section, render, render_text, render_machine, parse_machine, text_header, text_model, text_tail,
)
from source.Cli.Commands import (
    PASS, FAIL, USAGE, DEMOS, RunSettings, cmd_check, cmd_intervalize, cmd_search, cmd_intersection, cmd_demo,
    finish_search, model_text, open_search, search_header,
)
from source.Cli.App import ArgumentError, build_parser, parse_arguments, run_settings
