import asyncio

import pytest

from source.Logging import (
    LogLevel, Logger, LoggerComposer, RotType, parse_amount, size_type_dict, stop_logging, time_type_dict,
)


def test_parse_amount():
    assert parse_amount("1 mb", size_type_dict) == 1024 * 1024
    assert parse_amount("12 hours", time_type_dict) == 12 * 3600
    assert parse_amount("40", size_type_dict) == 40
    with pytest.raises(ValueError):
        parse_amount("3 fortnights", time_type_dict)


def test_configuration_strings():
    composer = LoggerComposer("info", None, "size", "2 kb")
    assert composer.level is LogLevel.INFO
    assert composer.rotation is RotType.SIZE
    assert LoggerComposer("verbose").level is LogLevel.WARNING


def test_same_name_is_the_same_logger():
    async def scenario():
        LoggerComposer.configure("INFO")
        first = Logger("Toolkit")
        second = Logger("Toolkit", "other.log")
        await stop_logging()
        return first, second

    first, second = asyncio.run(scenario())
    assert first is second


def test_level_filter_and_stderr(capsys):
    async def scenario():
        LoggerComposer.configure("WARNING")
        logger = Logger("Toolkit")
        await logger.info("hidden line")
        await logger.error("shown line")
        await stop_logging()

    asyncio.run(scenario())
    err = capsys.readouterr().err
    assert "Toolkit/ERROR] -> shown line" in err
    assert "hidden line" not in err


def test_quiet_logs_nothing(capsys):
    async def scenario():
        LoggerComposer.configure("QUIET")
        await Logger("Toolkit").error("nothing")
        await stop_logging()

    asyncio.run(scenario())
    assert capsys.readouterr().err == ""


def test_file_rotation_by_size(tmp_path):
    async def scenario():
        LoggerComposer.configure("INFO", str(tmp_path), "SIZE", "1 b")
        logger = Logger("Toolkit", "toolkit.log")
        await logger.info("first run")
        await logger.info("second run")
        await stop_logging()

    asyncio.run(scenario())
    files = sorted(tmp_path.glob("toolkit_*.log"))
    assert len(files) >= 2
    text = "".join(path.read_text() for path in files)
    assert "first run" in text and "second run" in text
    assert "first run" not in files[-1].read_text()
