import asyncio
from functools import partial
from typing import Optional, Sequence

from source.Cli.AlgebraFile import read_algebra, render_algebra, write_algebra
from source.Cli.App import ArgumentError, parse_arguments, run_settings
from source.Cli.Commands import (
    FAIL, USAGE, cmd_check, cmd_demo, cmd_intersection, cmd_intervalize, finish_search, model_text, open_search,
    search_header,
)
from source.Cli.Reports import render, text_header, text_model, text_tail
from source.Database.DBHelper import CatalogHelper
from source.DynamicConfigurationLoading import get_config, section
from source.ErrorHandling import (
    AlgebraParseError, GridSpecError, InvalidAlgebraError, PreconditionViolation, SizeCapExceeded,
    UnknownDemoError, UnknownSystemError,
)
from source.Logging import Logger, LoggerComposer, aprint, aprint_err, stop_logging
from source.ModelSearch import SearchTask

# exit code 2: the input could not be turned into a command
USAGE_ERRORS = (
    ArgumentError, AlgebraParseError, UnknownSystemError, UnknownDemoError, SizeCapExceeded, GridSpecError,
    InvalidAlgebraError, OSError,
)


class ToolkitService:
    """
    Runs one command line: loads configuration, sets up logging, dispatches the command
    and prints its report. Heavy computations run in the default executor so the loggers
    keep draining while they work.
    """

    def __init__(self, argv: Optional[Sequence[str]] = None):
        self.argv = argv
        self.args = None
        self.settings = None
        self.run_settings = None
        self.toolkit_logger: Optional[Logger] = None

    def _configure(self):
        settings = get_config(self.args.config)
        logging = section(settings, "logging")
        LoggerComposer.configure(
            loglevel=settings.log_level or "WARNING",
            directory=logging.directory,
            rotation=logging.rotation or "NONE",
            rotation_amount=logging.rotation_amount,
        )
        self.settings = settings
        self.toolkit_logger = Logger("Toolkit", logging.file or "toolkit.log")
        self.run_settings = run_settings(settings, self.args)

    async def _compute(self, function, *args):
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(None, partial(function, *args))

    async def run(self) -> int:
        try:
            self.args = parse_arguments(self.argv)
        except ArgumentError as e:
            await aprint_err(f"usage error: {e}")
            return USAGE
        try:
            self._configure()
            return await self._dispatch()
        except USAGE_ERRORS as e:
            await self._report_error(e)
            return USAGE
        except PreconditionViolation as e:
            await self._report_error(e)
            return FAIL
        finally:
            await stop_logging()

    async def _report_error(self, error: Exception):
        if self.toolkit_logger is not None:
            await self.toolkit_logger.error(str(error))
        else:
            await aprint_err(str(error))

    async def _dispatch(self) -> int:
        command = self.args.command
        await self.toolkit_logger.info(f"Running '{command}'")
        handler = {
            "check": self._check,
            "intervalize": self._intervalize,
            "search": self._search,
            "intersection": self._intersection,
            "demo": self._demo,
        }[command]
        code, report = await handler()
        if report is not None:
            await aprint(render(report, self.args.format, self.args.timings), end="")
        await self.toolkit_logger.info(f"'{command}' finished with exit code {code}")
        return code

    async def _check(self):
        alg = await read_algebra(self.args.path)
        return await self._compute(cmd_check, alg, self.args.systems, self.args.path)

    async def _intervalize(self):
        alg = await read_algebra(self.args.path)
        code, report, interval = await self._compute(cmd_intervalize, alg, self.args.verify, self.args.path)
        comment = f"intervalization of {self.args.path}"
        if self.args.out:
            await write_algebra(self.args.out, interval, comment)
            report.notes["written"] = self.args.out
        else:
            report.models.append(render_algebra(interval, comment))
        return code, report

    async def _search(self):
        args, run = self.args, self.run_settings
        try:
            task = SearchTask(args.n, tuple(args.require), tuple(args.forbid), args.limit, args.top,
                              run.max_single, run.max_double)
        except PreconditionViolation as e:
            # bad size, top or limit are usage errors, not failed gates
            raise ArgumentError(str(e))
        # text output streams one top-subtree at a time; the machine document needs the totals first
        streamed = args.format == "text"
        if streamed:
            await aprint(text_header(search_header(task)), end="")
        stream = open_search(task, run.workers)
        try:
            while (batch := await self._compute(stream.next_batch)) is not None:
                if streamed and batch:
                    await aprint("".join(text_model(model_text(alg)) for alg in batch), end="")
        finally:
            stream.close()
        code, report, result = finish_search(task, stream)
        await self.toolkit_logger.info(
            f"Search n={task.size}: {result.count} models, {result.checked} leaves checked, {result.pruned} pruned"
        )
        url = args.catalog or section(self.settings, "catalog").url
        if url:
            catalog = CatalogHelper(url)
            report.notes["catalog run"] = await catalog.record_run(task, result)
        if streamed:
            await aprint(text_tail(report, args.timings), end="")
            return code, None
        return code, report

    async def _intersection(self):
        run = self.run_settings
        if self.args.n > run.max_double:
            raise SizeCapExceeded("intersection", self.args.n, run.max_double)
        return await self._compute(cmd_intersection, self.args.n, run)

    async def _demo(self):
        return await self._compute(cmd_demo, self.args.name, self.run_settings)


async def run_toolkit(argv: Optional[Sequence[str]] = None) -> int:
    return await ToolkitService(argv).run()
