"""
Logging Module
--------------
Asynchronous logging for the toolkit service. Log lines go to stderr and, when a log
directory is configured, to a rotated log file. Reports never pass through here: they
are written to stdout with aprint.

Key Components:
   - LogLevel / RotType: levels and file rotation kinds, parsed from config.yaml strings.
   - LoggerComposer: the one registry of loggers for a run; holds level, directory and rotation.
   - ComposerMeta: registers every Logger; a second Logger with the same name is the first one.
   - Logger: a message queue drained by one task per logger.
   - FileGateway: owns one log file shared by the loggers that name it.
   - aprint / aprint_err / stop_logging.

Usage:
- LoggerComposer.configure(...) once, inside the running loop.
- Logger(name, file), then await logger.info(...).
- await stop_logging() before the loop closes.
"""

import asyncio, enum, sys, os, aiofiles
from datetime import datetime
from types import MappingProxyType
from typing import Dict, Optional, Tuple

_KB = 1024
size_type_dict = MappingProxyType({
    **dict.fromkeys(("b", "byte", "bytes"), 1),
    **dict.fromkeys(("kb", "kilobyte", "kilobytes"), _KB),
    **dict.fromkeys(("mb", "megabyte", "megabytes"), _KB ** 2),
    **dict.fromkeys(("gb", "gigabyte", "gigabytes"), _KB ** 3),
})

time_type_dict = MappingProxyType({
    **dict.fromkeys(("s", "second", "seconds"), 1),
    **dict.fromkeys(("m", "minute", "minutes"), 60),
    **dict.fromkeys(("h", "hour", "hours"), 60 * 60),
    **dict.fromkeys(("d", "day", "days"), 60 * 60 * 24),
})


class LoggingCreationException(Exception):
    pass


class LogLevel(enum.Enum):
    DEBUG = 0
    INFO = 1
    WARNING = 2
    ERROR = 3
    QUIET = 4


loglevel_dict = MappingProxyType({level.name: level for level in LogLevel})


class RotType(enum.Enum):
    NONE = 0
    TIME = 1
    SIZE = 2


rottype_dict = MappingProxyType({rot.name: rot for rot in RotType})


def parse_amount(amount: str, units: MappingProxyType) -> int:
    """'12 hours' or '1 mb' in seconds or bytes; a bare number is taken as the base unit."""
    parts = str(amount).split()
    if len(parts) == 1:
        return int(parts[0])
    value, unit = parts
    if unit.lower() not in units:
        raise ValueError(f"Unknown unit {unit!r} in {amount!r}")
    return int(value) * units[unit.lower()]


class LoggerComposer:
    """
    Registry of the loggers of one run. configure() must be called from inside the running loop;
    a Logger created before that gets a WARNING composer without a directory.
    """
    _instance: Optional["LoggerComposer"] = None

    @classmethod
    def configure(
            cls,
            loglevel: str,
            directory: Optional[str] = None,
            rotation: str = "NONE",
            rotation_amount: Optional[str] = None,
    ) -> "LoggerComposer":
        if cls._instance is not None:
            raise RuntimeError("LoggerComposer already configured. Await stop_logging() first.")
        cls._instance = cls(loglevel, directory, rotation, rotation_amount)
        return cls._instance

    @classmethod
    def current(cls) -> "LoggerComposer":
        return cls._instance or cls.configure("WARNING")

    @classmethod
    def reset(cls):
        cls._instance = None

    def __init__(self, loglevel: str, directory: Optional[str] = None, rotation: str = "NONE",
                 rotation_amount: Optional[str] = None):
        self.level = loglevel_dict.get(str(loglevel).upper(), LogLevel.WARNING)
        self.directory = directory
        self.rotation = rottype_dict.get(str(rotation).upper(), RotType.NONE)
        self.rotation_amount = rotation_amount
        self._loggers: Dict[str, "Logger"] = {}
        self._gateways: Dict[str, "FileGateway"] = {}

    def __contains__(self, name: str) -> bool:
        return name in self._loggers

    def __getitem__(self, name: str) -> "Logger":
        return self._loggers[name]

    def gateway_for(self, file: str) -> Optional["FileGateway"]:
        """Shared per file; None when logs stay on stderr."""
        if self.directory is None:
            return None
        location = os.path.join(self.directory, file)
        if location not in self._gateways:
            gateway = FileGateway(location)
            if self.rotation is not RotType.NONE and self.rotation_amount:
                gateway.set_file_rotation(self.rotation, self.rotation_amount)
            gateway.start()
            self._gateways[location] = gateway
        return self._gateways[location]

    def add_logger(self, logger: "Logger"):
        if logger.name in self._loggers:
            raise ValueError(f"Logger {logger.name} already exists.")
        self._loggers[logger.name] = logger

    async def stop_everything(self):
        """Loggers first so their last lines reach the gateways."""
        for logger in self._loggers.values():
            await logger.stop()
        for gateway in self._gateways.values():
            await gateway.stop()
        self._loggers, self._gateways = {}, {}


class ComposerMeta(type):
    def __call__(cls, name: str = "default", file: str = "toolkit.log"):
        composer = LoggerComposer.current()
        if name in composer:
            return composer[name]
        logger = super().__call__(name, file)
        logger.level = composer.level
        logger.gateway = composer.gateway_for(file)
        try:
            composer.add_logger(logger)
        except Exception as e:
            raise LoggingCreationException(f"Failed to register logger {name}.") from e
        return logger


class Logger(metaclass=ComposerMeta):
    def __init__(self, name: str = "default", file: str = "toolkit.log"):
        self.name = name
        self.file = file
        self.level = LogLevel.WARNING
        self.gateway: Optional[FileGateway] = None
        self._queue: asyncio.Queue = asyncio.Queue()
        self._task: Optional[asyncio.Task] = None

    async def log(self, level: LogLevel, message: str):
        if self.level is LogLevel.QUIET or level.value < self.level.value:
            return
        await self._queue.put((level, message))
        if self._task is None:
            self._task = asyncio.create_task(self._process_queue())

    async def debug(self, message):
        await self.log(LogLevel.DEBUG, message)

    async def info(self, message):
        await self.log(LogLevel.INFO, message)

    async def warning(self, message):
        await self.log(LogLevel.WARNING, message)

    async def error(self, message):
        await self.log(LogLevel.ERROR, message)

    def format(self, level: LogLevel, message: str) -> str:
        timestamp = datetime.now().strftime("%m-%d_%H:%M:%S")
        return f"[{timestamp} - {self.name}/{level.name}] -> {message}"

    async def _process_queue(self):
        while True:
            item = await self._queue.get()
            if item is None:
                break
            line = self.format(*item)
            try:
                await aprint_err(line)
                if self.gateway is not None:
                    await self.gateway.enqueue(line)
            except Exception as e:
                await aprint_err(f"Logger {self.name} failed to log message: {e}")

    async def stop(self):
        """Drain the queue and stop the processing task."""
        if self._task is None:
            return
        await self._queue.put(None)
        try:
            await self._task
        except asyncio.CancelledError:
            pass
        self._task = None


class FileGateway:
    """
    Appends lines to <stem>_<start stamp>.log next to the configured file and starts a new
    stamped file when the rotation limit is reached.
    """
    def __init__(self, file_loc: str):
        self.file_loc = file_loc
        self._start_stamp = int(datetime.now().timestamp())
        self._queue: asyncio.Queue = asyncio.Queue()
        self._task: Optional[asyncio.Task] = None
        self._rot_type = RotType.NONE
        self._rot_amt = 0

    def start(self):
        if self._task is None:
            self._task = asyncio.create_task(self._stream_process())

    async def enqueue(self, message: Optional[str]):
        await self._queue.put(message)

    def set_file_rotation(self, rot_type: RotType, amt: str):
        self._rot_type = rot_type
        if rot_type is RotType.SIZE:
            self._rot_amt = parse_amount(amt, size_type_dict)
        elif rot_type is RotType.TIME:
            self._rot_amt = parse_amount(amt, time_type_dict)

    def rotate_if_needed(self, now: int, size: int) -> bool:
        if self._rot_type is RotType.SIZE:
            return size >= self._rot_amt
        if self._rot_type is RotType.TIME:
            return now - self._start_stamp >= self._rot_amt
        return False

    def current_path(self) -> str:
        return f"{os.path.splitext(self.file_loc)[0]}_{self._start_stamp}.log"

    def session_header(self) -> str:
        return f"--- bci-toolkit log session {self._start_stamp} ---\n"

    async def _write_until_rotation(self, path: str) -> Tuple[bool, bool]:
        """(rotate, stopped)"""
        async with aiofiles.open(path, mode="a") as stream:
            await stream.write(self.session_header())
            await stream.flush()
            while True:
                message = await self._queue.get()
                if message is None:
                    return False, True
                await stream.write(message + "\n")
                await stream.flush()
                if self.rotate_if_needed(int(datetime.now().timestamp()), os.path.getsize(path)):
                    return True, False

    async def _stream_process(self):
        while True:
            path = self.current_path()
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            try:
                rotate, stopped = await self._write_until_rotation(path)
            except asyncio.CancelledError:
                return
            except OSError as e:
                await aprint_err(f"FileGateway cannot write {path}: {e}")
                return
            if stopped or not rotate:
                return
            # same-second rotations would reuse the name
            self._start_stamp = max(self._start_stamp + 1, int(datetime.now().timestamp()))

    async def stop(self):
        """Flush pending lines and close the file."""
        if self._task is None:
            return
        await self._queue.put(None)
        try:
            await self._task
        except asyncio.CancelledError:
            pass
        self._task = None


async def _write(stream, message: str, sep: str, end: str, args):
    text = sep.join([message, *map(str, args)]) + end
    try:
        loop = asyncio.get_running_loop()
        await loop.run_in_executor(None, stream.write, text)
    except RuntimeError:
        stream.write(text)


async def aprint(message: str, sep: str = " ", end: str = "\n", *args):
    await _write(sys.stdout, message, sep, end, args)


async def aprint_err(message: str, sep: str = " ", end: str = "\n", *args):
    await _write(sys.stderr, message, sep, end, args)


async def stop_logging():
    """Stop every logger and gateway, then forget the composer."""
    composer = LoggerComposer._instance
    if composer is not None:
        await composer.stop_everything()
    LoggerComposer.reset()
