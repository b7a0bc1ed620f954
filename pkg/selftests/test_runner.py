# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import time
from typing import List, Type
from unittest import TestCase

from assertpy import assert_that

from esscert import notifier, runner, schema
from esscert.checksuite import (
    CheckGroup,
    CheckGroupMetadata,
    get_groups_metadata,
    validate_requirements,
)
from esscert.report import CheckResult, CheckStatus, Section
from esscert.sseq import SpectralPipeline
from esscert.util import ConfigurationException, EsscertException, constants


class PassingGroup(CheckGroup):
    def run(self) -> List[Section]:
        section = Section(self.metadata.name)
        section.check("ok", True, "holds")
        section.info("note", "for information")
        return [section]


class FailingGroup(CheckGroup):
    def run(self) -> List[Section]:
        section = Section(self.metadata.name)
        section.check("wrong", False, "doesn't hold")
        return [section]


class RaisingGroup(CheckGroup):
    def run(self) -> List[Section]:
        raise ValueError("boom")


class SlowGroup(CheckGroup):
    def run(self) -> List[Section]:
        for _ in range(100):
            time.sleep(0.1)
        return []


def _metadata(
    name: str, group_class: Type[CheckGroup], order: int = 1, min_pmax: int = 0
) -> CheckGroupMetadata:
    # not registered, the registry holds the real groups only.
    metadata = CheckGroupMetadata(name, order, name, min_pmax=min_pmax)
    metadata.group_class = group_class
    return metadata


def _runner(timeout: int = constants.DEFAULT_GROUP_TIMEOUT) -> runner.CheckRunner:
    config = schema.Config(pmax=2, qmax=2, group_timeout=timeout)
    return runner.CheckRunner(config, SpectralPipeline(pmax=2, qmax=2))


class PrintResultsTestCase(TestCase):
    def test_lines(self) -> None:
        lines: List[str] = []
        runner.print_results(
            [
                CheckResult("group.order", CheckStatus.PASS, "|G| = 64"),
                notifier.CheckResultMessage(
                    id_="e3.row0", group="e3", status=CheckStatus.FAIL, message="no"
                ),
            ],
            lines.append,
        )
        self.assertEqual(f"{'group.order':>50}: pass  |G| = 64", lines[1])
        self.assertEqual(f"{'e3.row0':>50}: fail  no", lines[2])
        self.assertEqual(
            [
                "check result summary",
                "    TOTAL: 2",
                "    PASS : 1",
                "    FAIL : 1",
                "    INFO : 0",
            ],
            lines[3:],
        )

    def test_unknown_type(self) -> None:
        assert_that(runner.print_results).raises(EsscertException).when_called_with(
            ["text"], print
        )


class SelectGroupsTestCase(TestCase):
    def test_registered(self) -> None:
        names = [x.name for x in runner.select_groups([])]
        self.assertEqual(
            [
                "group",
                "e3",
                "e4",
                "einf",
                "relations",
                "essential",
                "products",
                "series",
                "properties",
            ],
            names,
        )
        self.assertEqual(
            names, [x.name for x in runner.select_groups([constants.GROUP_ALL])]
        )

    def test_order(self) -> None:
        selected = runner.select_groups(["einf", "group", "einf"])
        self.assertEqual(["group", "einf"], [x.name for x in selected])

    def test_unknown(self) -> None:
        assert_that(runner.select_groups).raises(
            ConfigurationException
        ).when_called_with(["group", "nope"])

    def test_requirements(self) -> None:
        first = _metadata("first", PassingGroup, order=2)
        second = _metadata("second", PassingGroup, order=1)
        second.requires = ["first"]
        assert_that(validate_requirements).raises(EsscertException).when_called_with(
            {"first": first, "second": second}
        )
        second.requires = ["missing"]
        assert_that(validate_requirements).raises(EsscertException).when_called_with(
            {"first": first, "second": second}
        )
        validate_requirements(get_groups_metadata())


class CheckRunnerTestCase(TestCase):
    def test_passing(self) -> None:
        check_runner = _runner()
        report = check_runner.run([_metadata("passing", PassingGroup)])
        self.assertEqual(constants.EXIT_PASS, check_runner.exit_code)
        self.assertEqual(["passing.ok", "passing.note"], [x.id for x in report.checks])
        self.assertEqual(1, report.summary.info)

    def test_failing(self) -> None:
        check_runner = _runner()
        report = check_runner.run(
            [_metadata("passing", PassingGroup), _metadata("failing", FailingGroup)]
        )
        self.assertEqual(constants.EXIT_FAIL, check_runner.exit_code)
        self.assertEqual(["failing.wrong"], check_runner.failed_ids(report))
        self.assertEqual(constants.EXIT_FAIL, runner.exit_code_of(report))

    def test_error(self) -> None:
        check_runner = _runner()
        report = check_runner.run([_metadata("raising", RaisingGroup)])
        result = report.get("raising.error")
        assert result is not None
        self.assertEqual(CheckStatus.FAIL, result.status)
        self.assertEqual("ValueError: boom", result.message)

    def test_timeout(self) -> None:
        check_runner = _runner(timeout=1)
        report = check_runner.run(
            [_metadata("slow", SlowGroup), _metadata("passing", PassingGroup, 2)]
        )
        self.assertEqual(["slow.timeout"], check_runner.failed_ids(report))
        assert_that(report.get("passing.ok")).is_not_none()

    def test_window(self) -> None:
        metadata = _metadata("large", PassingGroup, min_pmax=14)
        assert_that(_runner().run).raises(ConfigurationException).when_called_with(
            [metadata]
        )

    def test_run_group(self) -> None:
        config = schema.Config(pmax=2, qmax=2, only=["group"])
        report, code = runner.run(config)
        self.assertEqual(constants.EXIT_PASS, code)
        assert_that(report.get("group.order")).is_not_none()

    def test_create_pipeline(self) -> None:
        config = schema.Config(pmax=5, qmax=3, concurrency=2)
        pipeline = runner.create_pipeline(config)
        self.assertEqual((5, 3), (pipeline.pmax, pipeline.qmax))
        self.assertEqual((5, 3), (pipeline.e3_pmax, pipeline.e3_qmax))
        self.assertEqual(2, pipeline.concurrency)
