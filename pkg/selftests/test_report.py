# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import json
from unittest import TestCase

from assertpy import assert_that

from esscert.report import CheckResult, CheckStatus, Section, VerificationReport


def _sections() -> list:
    first = Section("group")
    first.check("order", True, "|G| = 64")
    first.check("center.size", False, "|Z(G)| = 2", ["(0,0)", "(0,1)"])
    second = Section("series.numerator")
    second.info("published_sum", "the coefficient sum is stated as 136")
    second.add("", CheckStatus.PASS)
    return [first, second]


class SectionTestCase(TestCase):
    def test_ids(self) -> None:
        first, second = _sections()
        self.assertEqual(
            ["group.order", "group.center.size"], [x.id for x in first.results]
        )
        self.assertEqual("series.numerator", second.results[-1].id)

    def test_passed(self) -> None:
        first, second = _sections()
        assert_that(first.passed).is_false()
        self.assertEqual(["group.center.size"], first.failed_ids())
        assert_that(second.passed).is_true()

    def test_check_returns_condition(self) -> None:
        section = Section("x")
        assert_that(section.check("a", True)).is_true()
        assert_that(section.check("b", False)).is_false()

    def test_extend(self) -> None:
        first, second = _sections()
        first.extend(second)
        assert_that(first.results).is_length(4)


class CheckResultTestCase(TestCase):
    def test_text(self) -> None:
        self.assertEqual(
            "group.order: pass - |G| = 64",
            CheckResult("group.order", CheckStatus.PASS, "|G| = 64").to_text(),
        )
        self.assertEqual("a.b: info", CheckResult("a.b", CheckStatus.INFO).to_text())


class VerificationReportTestCase(TestCase):
    def test_summary(self) -> None:
        report = VerificationReport.from_sections(_sections())
        self.assertEqual(2, report.summary.passed)
        self.assertEqual(1, report.summary.fail)
        self.assertEqual(1, report.summary.info)
        assert_that(report.passed).is_false()
        self.assertEqual(
            "summary: 2 pass, 1 fail, 1 info", report.to_text().splitlines()[-1]
        )

    def test_get(self) -> None:
        report = VerificationReport.from_sections(_sections())
        result = report.get("group.center.size")
        assert result is not None
        self.assertEqual(CheckStatus.FAIL, result.status)
        assert_that(report.get("group.missing")).is_none()

    def test_empty(self) -> None:
        report = VerificationReport.from_sections([])
        assert_that(report.passed).is_true()
        self.assertEqual("summary: 0 pass, 0 fail, 0 info", report.to_text())

    def test_json(self) -> None:
        report = VerificationReport.from_sections(_sections())
        data = json.loads(report.to_json_text())
        self.assertEqual({"pass": 2, "fail": 1, "info": 1}, data["summary"])
        self.assertEqual("fail", data["checks"][1]["status"])
        self.assertEqual(["(0,0)", "(0,1)"], data["checks"][1]["witness"])

    def test_json_round_trip(self) -> None:
        report = VerificationReport.from_sections(_sections())
        loaded = VerificationReport.from_json_text(report.to_json_text())
        self.assertEqual([x.id for x in report.checks], [x.id for x in loaded.checks])
        self.assertEqual(
            [x.status for x in report.checks], [x.status for x in loaded.checks]
        )
        self.assertEqual(report.summary, loaded.summary)
