# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import sys
import traceback
from argparse import Namespace
from datetime import datetime
from logging import DEBUG, INFO
from pathlib import Path, PurePath
from typing import List, Optional, Tuple

from retry import retry

from esscert.parameter_parser.argparser import parse_args
from esscert.util import ConfigurationException, constants, get_datetime_path
from esscert.util.logger import create_file_handler, get_logger, set_level
from esscert.util.perf_timer import create_timer

RUNS_ROOT = Path("runtime") / "runs"


@retry(FileExistsError, tries=10, delay=0.2)  # type: ignore
def generate_run_path(root_path: Path) -> Tuple[PurePath, Path]:
    """
    runs/<date>/<date-time-ms>. Two runs in the same millisecond retry until the
    name is unique.
    """
    now = datetime.utcnow()
    logic_path = PurePath(now.strftime("%Y%m%d"), get_datetime_path(now))
    local_path = root_path.absolute() / logic_path
    if local_path.exists():
        raise FileExistsError(f"run path '{local_path}' exists already")
    local_path.mkdir(parents=True)
    return logic_path, local_path


def initialize_runtime_folder() -> None:
    logic_path, local_path = generate_run_path(RUNS_ROOT)
    constants.RUN_ID = logic_path.name
    constants.RUN_NAME = f"esscert-{constants.RUN_ID}"
    constants.RUN_LOCAL_PATH = local_path


def _start_logging(args: Namespace) -> None:
    set_level(DEBUG if args.debug else INFO)
    create_file_handler(constants.RUN_LOCAL_PATH / f"{constants.RUN_NAME}.log")

    log = get_logger()
    log.info(f"Python version: {sys.version}")
    log.debug(f"command line args: {sys.argv}")
    log.info(f"run local path: {constants.RUN_LOCAL_PATH}")


def main(argv: Optional[List[str]] = None) -> int:
    total_timer = create_timer()
    log = get_logger()
    exit_code = constants.EXIT_PASS
    try:
        args = parse_args(argv)
        initialize_runtime_folder()
        _start_logging(args)

        exit_code = args.func(args)
        assert isinstance(exit_code, int), f"actual: {type(exit_code)}"
    except ConfigurationException as identifier:
        log.error(f"configuration error: {identifier}")
        exit_code = constants.EXIT_USAGE
    finally:
        log.info(f"completed in {total_timer}")

    return exit_code


if __name__ == "__main__":
    exit_code = constants.EXIT_PASS
    try:
        exit_code = main()
    except SystemExit as identifier:
        # argparse exits with 2 on usage errors.
        exit_code = identifier.code if isinstance(identifier.code, int) else 0
    except Exception as exception:
        exit_code = constants.EXIT_FAIL
        try:
            get_logger().exception(exception)
        except Exception:
            # the logger itself is broken, print to the console only.
            traceback.print_exc()
    finally:
        sys.exit(exit_code)
