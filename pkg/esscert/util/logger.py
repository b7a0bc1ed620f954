# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import logging
import sys
import time
from pathlib import Path
from typing import Iterable, Optional, cast

DEFAULT_LOG_NAME = "esscert"

_FORMAT = "%(asctime)s.%(msecs)03d[%(thread)d][%(levelname)s] %(name)s %(message)s"
_formatter = logging.Formatter(fmt=_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

# reports are printed to stdout.
_console_handler = logging.StreamHandler(sys.stderr)


class Logger(logging.Logger):
    def lines(self, level: int, content: Iterable[str], prefix: str = "") -> None:
        """
        Logs a multi line text like a dimension table, one record per line, so every
        line keeps the timestamp and the logger name.
        """
        for line in content:
            if line.strip():
                self.log(level, f"{prefix}{line}")


# module level loggers are created on import, before init_logger runs.
logging.setLoggerClass(Logger)


def _root() -> Logger:
    return cast(Logger, logging.getLogger(DEFAULT_LOG_NAME))


def init_logger() -> None:
    logging.Formatter.converter = time.gmtime

    root = _root()
    root.setLevel(logging.DEBUG)
    root.propagate = False
    if _console_handler not in root.handlers:
        root.addHandler(_console_handler)
    _console_handler.setLevel(logging.INFO)


def set_level(level: int) -> None:
    _console_handler.setLevel(level)


def create_file_handler(path: Path) -> Optional[logging.FileHandler]:
    """
    The log file always has DEBUG details. It's not created in unit tests, they
    run many commands in one process.
    """
    if "unittest" in sys.modules:
        return None

    handler = logging.FileHandler(path, "w", "utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(_formatter)
    _root().addHandler(handler)
    return handler


def get_logger(name: str = "", id_: str = "") -> Logger:
    if id_:
        name = f"{name}[{id_}]"
    if not name:
        return _root()
    return cast(Logger, _root().getChild(name))
