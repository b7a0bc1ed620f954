# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from argparse import SUPPRESS, ArgumentParser, Namespace
from pathlib import Path
from typing import Any, List, Optional

from esscert import commands
from esscert.util import constants


def _default(value: Any, suppress: bool) -> Any:
    # options repeated on a subcommand must not reset values given before it.
    return SUPPRESS if suppress else value


def _split_groups(value: str) -> List[str]:
    return [x.strip() for x in value.split(",") if x.strip()]


def support_config(parser: ArgumentParser, suppress: bool = False) -> None:
    parser.add_argument(
        "--config",
        "-c",
        type=Path,
        default=_default(None, suppress),
        help="Specify the path of a YAML config file. Command line options "
        "overwrite its values.",
    )


def support_debug(parser: ArgumentParser, suppress: bool = False) -> None:
    parser.add_argument(
        "--debug",
        "-d",
        dest="debug",
        action="store_true",
        default=_default(False, suppress),
        help="Set the log level output by the console to DEBUG level. By default, the "
        "console displays logs with INFO and higher levels. The log file will contain "
        "the DEBUG level and is not affected by this setting.",
    )


def support_window(parser: ArgumentParser, suppress: bool = False) -> None:
    parser.add_argument(
        "--pmax",
        type=int,
        default=_default(None, suppress),
        help=f"largest p of the window, default {constants.DEFAULT_PMAX}. The full "
        f"suite needs at least {constants.FULL_SUITE_PMAX}.",
    )
    parser.add_argument(
        "--qmax",
        type=int,
        default=_default(None, suppress),
        help=f"largest q of the window, default {constants.DEFAULT_QMAX}. The full "
        f"suite needs at least {constants.FULL_SUITE_QMAX}.",
    )
    parser.add_argument(
        "--concurrency",
        type=int,
        default=_default(None, suppress),
        help="worker threads to build the pages.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=_default(None, suppress),
        help="seed of the random samples.",
    )


def support_output(parser: ArgumentParser, suppress: bool = False) -> None:
    parser.add_argument(
        "--format",
        choices=[constants.FORMAT_TEXT, constants.FORMAT_JSON],
        default=_default(None, suppress),
        help="output format of the report.",
    )
    parser.add_argument(
        "--only",
        type=_split_groups,
        default=_default(None, suppress),
        help="comma separated check groups to run.",
    )
    parser.add_argument(
        "--out",
        type=Path,
        default=_default(None, suppress),
        help="write the report to this file instead of stdout.",
    )


def _support_common(parser: ArgumentParser, suppress: bool) -> None:
    support_debug(parser, suppress)
    support_config(parser, suppress)
    support_window(parser, suppress)
    support_output(parser, suppress)


def create_parser() -> ArgumentParser:
    """This wraps Python's 'ArgumentParser' to setup our CLI."""
    parser = ArgumentParser(prog="esscert")
    _support_common(parser, suppress=False)

    # Default to 'verify all' when no subcommand is given.
    parser.set_defaults(func=commands.verify, groups=[])

    subparsers = parser.add_subparsers(dest="cmd", required=False)

    verify_parser = subparsers.add_parser(
        "verify", help="run check groups, all of them by default"
    )
    verify_parser.set_defaults(func=commands.verify)
    verify_parser.add_argument(
        "groups",
        nargs="*",
        help=f"check groups, or '{constants.GROUP_ALL}'",
    )

    dims_parser = subparsers.add_parser("dims", help="print a dimension table")
    dims_parser.set_defaults(func=commands.dims)
    dims_parser.add_argument(
        "--page",
        choices=[
            constants.PAGE_E2,
            constants.PAGE_E3,
            constants.PAGE_E4,
            constants.PAGE_EINF,
        ],
        default=constants.PAGE_EINF,
    )

    essential_parser = subparsers.add_parser(
        "essential", help="scan for essential classes or check given classes"
    )
    essential_parser.add_argument(
        "--scan",
        action="store_true",
        help="report the essential dimensions in every total degree.",
    )
    essential_parser.set_defaults(func=commands.essential)
    essential_parser.add_argument(
        "--check",
        dest="expressions",
        action="append",
        help="an element of the E-infinity page, like 'a4^4*b7*u10^4'. It can be "
        "given more than once.",
    )

    products_parser = subparsers.add_parser(
        "products", help="products of essential classes"
    )
    products_parser.set_defaults(func=commands.products)
    products_parser.add_argument(
        "--all",
        dest="all_products",
        action="store_true",
        help="also scan the pairwise and triple products.",
    )

    series_parser = subparsers.add_parser("series", help="the Poincare series")
    series_parser.set_defaults(func=commands.series)

    group_parser = subparsers.add_parser("group", help="the group structure report")
    group_parser.set_defaults(func=commands.group)

    report_parser = subparsers.add_parser(
        "report", help="run all check groups and export a certificate"
    )
    report_parser.set_defaults(func=commands.report)
    report_parser.add_argument(
        "--certificate",
        type=Path,
        help="write the report, the page bases and the differential matrices as "
        "JSON to this file.",
    )

    for sub_parser in subparsers.choices.values():
        _support_common(sub_parser, suppress=True)

    return parser


def parse_args(args: Optional[List[str]] = None) -> Namespace:
    return create_parser().parse_args(args)
