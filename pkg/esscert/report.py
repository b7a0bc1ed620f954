# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

from dataclasses_json import dataclass_json
from marshmallow import fields

from esscert.util import constants, field_metadata


class CheckStatus(str, Enum):
    PASS = constants.STATUS_PASS
    FAIL = constants.STATUS_FAIL
    INFO = constants.STATUS_INFO


@dataclass_json()
@dataclass
class CheckResult:
    id: str
    status: CheckStatus
    message: str = ""
    witness: Any = None

    def to_text(self) -> str:
        text = f"{self.id}: {self.status.value}"
        if self.message:
            text = f"{text} - {self.message}"
        return text


class Section:
    """
    The checks of one verification step. Check ids are "<prefix>.<name>".
    """

    def __init__(self, prefix: str) -> None:
        self.prefix = prefix
        self.results: List[CheckResult] = []

    def add(
        self,
        name: str,
        status: CheckStatus,
        message: str = "",
        witness: Any = None,
    ) -> CheckResult:
        result = CheckResult(
            id=f"{self.prefix}.{name}" if name else self.prefix,
            status=status,
            message=message,
            witness=witness,
        )
        self.results.append(result)
        return result

    def check(
        self, name: str, condition: bool, message: str = "", witness: Any = None
    ) -> bool:
        self.add(
            name,
            CheckStatus.PASS if condition else CheckStatus.FAIL,
            message,
            witness,
        )
        return condition

    def info(self, name: str, message: str, witness: Any = None) -> None:
        self.add(name, CheckStatus.INFO, message, witness)

    def extend(self, other: "Section") -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(x.status != CheckStatus.FAIL for x in self.results)

    def failed_ids(self) -> List[str]:
        return [x.id for x in self.results if x.status == CheckStatus.FAIL]


@dataclass_json()
@dataclass
class ReportSummary:
    passed: int = field(
        default=0,
        metadata=field_metadata(fields.Int, data_key=constants.STATUS_PASS),
    )
    fail: int = 0
    info: int = 0


@dataclass_json()
@dataclass
class VerificationReport:
    checks: List[CheckResult] = field(default_factory=list)
    summary: ReportSummary = field(default_factory=ReportSummary)

    @classmethod
    def from_sections(cls, sections: Iterable[Section]) -> "VerificationReport":
        report = cls()
        for section in sections:
            report.checks.extend(section.results)
        report.update_summary()
        return report

    def update_summary(self) -> None:
        self.summary = ReportSummary(
            passed=self.count(CheckStatus.PASS),
            fail=self.count(CheckStatus.FAIL),
            info=self.count(CheckStatus.INFO),
        )

    def count(self, status: CheckStatus) -> int:
        return sum(1 for x in self.checks if x.status == status)

    @property
    def passed(self) -> bool:
        return self.count(CheckStatus.FAIL) == 0

    def get(self, id_: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.id == id_:
                return check
        return None

    def to_text(self) -> str:
        lines = [x.to_text() for x in self.checks]
        lines.append(
            f"summary: {self.summary.passed} pass, {self.summary.fail} fail, "
            f"{self.summary.info} info"
        )
        return "\n".join(lines)

    def to_json_text(self) -> str:
        return json.dumps(self.to_dict_checked(), indent=2, ensure_ascii=False)

    def to_dict_checked(self) -> Dict[str, Any]:
        data: Dict[str, Any] = self.to_dict(encode_json=True)  # type: ignore
        return data

    @classmethod
    def from_json_text(cls, text: str) -> "VerificationReport":
        report: VerificationReport = cls.from_json(text)  # type: ignore
        return report
