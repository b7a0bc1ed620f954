# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import json
import os
from argparse import Namespace
from contextlib import redirect_stdout
from io import StringIO
from pathlib import Path
from tempfile import TemporaryDirectory
from typing import List
from unittest import TestCase

from assertpy import assert_that

from esscert import commands, schema
from esscert.main import main
from esscert.parameter_parser.argparser import parse_args
from esscert.report import Section, VerificationReport
from esscert.util import constants, hookimpl, plugin_manager


class ArgParserTestCase(TestCase):
    def test_defaults(self) -> None:
        args = parse_args([])
        self.assertEqual(commands.verify, args.func)
        self.assertEqual([], args.groups)
        assert_that(args.pmax).is_none()
        assert_that(args.debug).is_false()

    def test_options_before_subcommand(self) -> None:
        args = parse_args(["--pmax", "5", "verify", "group", "e3"])
        self.assertEqual(5, args.pmax)
        self.assertEqual(["group", "e3"], args.groups)
        args = parse_args(["verify", "--qmax", "4", "--only", "group, e3"])
        self.assertEqual(4, args.qmax)
        self.assertEqual(["group", "e3"], args.only)

    def test_subcommands(self) -> None:
        args = parse_args(["essential", "--check", "a1^4", "--check", "a1"])
        self.assertEqual(commands.essential, args.func)
        self.assertEqual(["a1^4", "a1"], args.expressions)
        args = parse_args(["dims"])
        self.assertEqual(constants.PAGE_EINF, args.page)
        args = parse_args(["products", "--all"])
        assert_that(args.all_products).is_true()
        args = parse_args(["report", "--certificate", "cert.json"])
        self.assertEqual(Path("cert.json"), args.certificate)

    def test_essential_scan_flag(self) -> None:
        assert_that(parse_args(["essential"]).scan).is_false()
        args = parse_args(["essential", "--check", "a1^4", "--scan"])
        assert_that(args.scan).is_true()
        self.assertEqual(["a1^4"], args.expressions)

    def test_load_config(self) -> None:
        config = commands.load_config(parse_args(["--seed", "9", "group"]))
        self.assertEqual(9, config.seed)
        self.assertEqual(constants.DEFAULT_PMAX, config.pmax)


class RenderReportTestCase(TestCase):
    def _report(self) -> VerificationReport:
        section = Section("group")
        section.check("order", True, "64")
        return VerificationReport.from_sections([section])

    def test_text(self) -> None:
        text = commands.render_report(self._report(), schema.Config(), ["header"])
        self.assertEqual(
            ["header", "group.order: pass - 64", "summary: 1 pass, 0 fail, 0 info"],
            text.splitlines(),
        )

    def test_json(self) -> None:
        config = schema.Config(format=constants.FORMAT_JSON)
        text = commands.render_report(self._report(), config, None, {"x": 1})
        data = json.loads(text)
        self.assertEqual(1, data["x"])
        self.assertEqual({"pass": 1, "fail": 0, "info": 0}, data["summary"])

    def test_stdout_ends_with_newline(self) -> None:
        text = commands.render_report(self._report(), schema.Config())
        buffer = StringIO()
        with redirect_stdout(buffer):
            commands.write_output(Namespace(out=None), text)
        output = buffer.getvalue()
        assert_that(output).ends_with("\n")
        assert_that(output.splitlines()[-1]).starts_with("summary: ")


class MainTestCase(TestCase):
    def setUp(self) -> None:
        self._folder = TemporaryDirectory()
        self._cwd = os.getcwd()
        self._run_id = constants.RUN_ID
        self._run_path = constants.RUN_LOCAL_PATH
        self._run_name = constants.RUN_NAME
        # the run folder is created under the working directory.
        os.chdir(self._folder.name)

    def tearDown(self) -> None:
        os.chdir(self._cwd)
        constants.RUN_ID = self._run_id
        constants.RUN_LOCAL_PATH = self._run_path
        constants.RUN_NAME = self._run_name
        self._folder.cleanup()

    def _out(self, name: str) -> Path:
        return Path(self._folder.name) / name

    def test_window_too_small(self) -> None:
        self.assertEqual(constants.EXIT_USAGE, main(["verify", "all", "--qmax", "4"]))

    def test_unknown_group(self) -> None:
        self.assertEqual(constants.EXIT_USAGE, main(["verify", "nope"]))

    def test_group(self) -> None:
        out = self._out("group.txt")
        self.assertEqual(constants.EXIT_PASS, main(["group", "--out", str(out)]))
        lines = out.read_text().splitlines()
        assert_that(lines[-1]).starts_with("summary: ").contains(" 0 fail")
        assert_that(Path(self._folder.name, "runtime", "runs").exists()).is_true()

    def test_dims_e2(self) -> None:
        out = self._out("e2.txt")
        code = main(
            ["dims", "--page", "e2", "--pmax", "6", "--qmax", "2", "--out", str(out)]
        )
        self.assertEqual(constants.EXIT_PASS, code)
        row = next(x for x in out.read_text().splitlines() if x.startswith(" 0 |"))
        assert_that(row).starts_with(" 0 |  1  4 10 20 35 56 84")

    def test_dims_json(self) -> None:
        out = self._out("e2.json")
        code = main(
            [
                "dims",
                "--page",
                "e2",
                "--pmax",
                "4",
                "--qmax",
                "2",
                "--format",
                "json",
                "--out",
                str(out),
            ]
        )
        self.assertEqual(constants.EXIT_PASS, code)
        data = json.loads(out.read_text())
        self.assertEqual(constants.PAGE_E2, data["page"])
        assert_that(data["dimensions"]).contains([2, 0, 10])

    def _full_window(self, *args: str) -> List[str]:
        return [
            "--pmax",
            str(constants.FULL_SUITE_PMAX),
            "--qmax",
            str(constants.FULL_SUITE_QMAX),
            "--format",
            "json",
            *args,
        ]

    def test_verify_all_same_with_concurrency(self) -> None:
        texts = []
        for concurrency in ["1", "4"]:
            out = self._out(f"verify_{concurrency}.json")
            code = main(
                self._full_window(
                    "--concurrency", concurrency, "--out", str(out), "verify", "all"
                )
            )
            self.assertEqual(constants.EXIT_PASS, code)
            texts.append(out.read_text())
        data = json.loads(texts[0])
        self.assertEqual(0, data["summary"]["fail"])
        self.assertEqual(texts[0], texts[1])

    def test_essential_check_only(self) -> None:
        out = self._out("check.json")
        code = main(
            self._full_window("--out", str(out), "essential", "--check", "a1*a2")
        )
        self.assertEqual(constants.EXIT_PASS, code)
        data = json.loads(out.read_text())
        assert_that(data).is_length(1)
        assert_that(data[0]["failed_divisor"]).is_not_none()

    def test_essential_check_with_scan(self) -> None:
        out = self._out("scan.json")
        code = main(
            self._full_window(
                "--out", str(out), "essential", "--check", "a1^4", "--scan"
            )
        )
        self.assertEqual(constants.EXIT_PASS, code)
        data = json.loads(out.read_text())
        assert_that(data).contains_key("dimensions", "checks", "summary")
        self.assertEqual("a1^4", data["checks"][0]["element"])
        assert_that(data["checks"][0]["failed_divisor"]).is_none()



class FinalizeRecorder:
    def __init__(self) -> None:
        self.called = 0

    @hookimpl  # type: ignore
    def on_run_finalize(self) -> None:
        self.called += 1


class RunFinalizeTestCase(TestCase):
    def test_hook(self) -> None:
        recorder = FinalizeRecorder()
        plugin_manager.register(recorder)
        try:
            commands.run_finalize()
        finally:
            plugin_manager.unregister(recorder)
        self.assertEqual(1, recorder.called)
