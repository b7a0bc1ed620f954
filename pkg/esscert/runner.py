# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import Any, Callable, Dict, List, Optional, Tuple

from func_timeout import FunctionTimedOut, func_timeout  # type: ignore

from esscert import checkgroups  # noqa: F401
from esscert import notifier, schema
from esscert.checksuite import (
    CheckGroupMetadata,
    get_groups_metadata,
    validate_requirements,
)
from esscert.report import CheckResult, CheckStatus, Section, VerificationReport
from esscert.sseq import SpectralPipeline
from esscert.util import ConfigurationException, EsscertException, constants
from esscert.util.logger import get_logger
from esscert.util.perf_timer import create_timer


def print_results(
    check_results: List[Any],
    output_method: Callable[[str], Any],
) -> None:
    output_method("________________________________________")
    result_count_dict: Dict[CheckStatus, int] = {}
    for check_result in check_results:
        if isinstance(check_result, CheckResult):
            result_id = check_result.id
        elif isinstance(check_result, notifier.CheckResultMessage):
            result_id = check_result.id_
        else:
            raise EsscertException(f"Unknown result type: '{type(check_result)}'")
        result_status = check_result.status
        output_method(
            f"{result_id:>50}: {result_status.value:<5} {check_result.message}"
        )
        result_count_dict[result_status] = result_count_dict.get(result_status, 0) + 1

    output_method("check result summary")
    output_method(f"    TOTAL: {len(check_results)}")
    for key in CheckStatus:
        output_method(f"    {key.value.upper():<5}: {result_count_dict.get(key, 0)}")


def select_groups(names: List[str]) -> List[CheckGroupMetadata]:
    """
    Groups in dependency order. No names or "all" selects every group.
    """
    groups = get_groups_metadata()
    validate_requirements(groups)
    if not names or constants.GROUP_ALL in names:
        selected = list(groups.values())
    else:
        unknown = [x for x in names if x not in groups]
        if unknown:
            raise ConfigurationException(
                f"unknown check groups: {unknown}, known: {sorted(groups)}"
            )
        selected = [groups[x] for x in dict.fromkeys(names)]
    return sorted(selected, key=lambda x: x.order)


def exit_code_of(report: VerificationReport) -> int:
    return constants.EXIT_PASS if report.passed else constants.EXIT_FAIL


def create_pipeline(config: schema.Config) -> SpectralPipeline:
    return SpectralPipeline(
        pmax=config.pmax,
        qmax=config.qmax,
        e3_pmax=config.e3_pmax,
        e3_qmax=config.e3_qmax,
        concurrency=config.concurrency,
    )


class CheckRunner:
    """
    Runs check groups one after another on a shared pipeline. Pages are built by
    the first group that needs them.
    """

    def __init__(
        self, config: schema.Config, pipeline: Optional[SpectralPipeline] = None
    ) -> None:
        self.config = config
        self.pipeline = pipeline if pipeline else create_pipeline(config)
        self.exit_code = constants.EXIT_PASS
        self._log = get_logger("runner")

    def run(self, groups: List[CheckGroupMetadata]) -> VerificationReport:
        for metadata in groups:
            metadata.check_window(self.config)
        self._log.info(
            f"running check groups: {[x.name for x in groups]} on window "
            f"pmax = {self.config.pmax}, qmax = {self.config.qmax}"
        )
        sections: List[Section] = []
        for metadata in groups:
            sections.extend(self._run_group(metadata))
        report = VerificationReport.from_sections(sections)
        self.exit_code = exit_code_of(report)
        if self.exit_code != constants.EXIT_PASS:
            self._log.info(f"failed checks: {self.failed_ids(report)}")
        return report

    def failed_ids(self, report: VerificationReport) -> List[str]:
        return [x.id for x in report.checks if x.status == CheckStatus.FAIL]

    def _run_group(self, metadata: CheckGroupMetadata) -> List[Section]:
        log = get_logger("check", metadata.name)
        timeout = self.config.group_timeout
        group = metadata.create(self.pipeline, self.config)
        timer = create_timer()
        try:
            sections: List[Section] = func_timeout(timeout, group.run)
        except FunctionTimedOut:
            # FunctionTimedOut is a BaseException, it must be caught explicitly.
            log.error(f"time out in {timeout} seconds")
            section = Section(metadata.name)
            section.add(
                "timeout", CheckStatus.FAIL, f"time out in {timeout} seconds"
            )
            sections = [section]
        except Exception as identifier:
            log.error(f"check group failed: {identifier}", exc_info=identifier)
            section = Section(metadata.name)
            section.add(
                "error",
                CheckStatus.FAIL,
                f"{type(identifier).__name__}: {identifier}",
            )
            sections = [section]
        log.info(f"completed in {timer}")

        for section in sections:
            for result in section.results:
                notifier.notify(
                    notifier.CheckResultMessage(
                        id_=result.id,
                        group=metadata.name,
                        status=result.status,
                        message=result.message,
                    )
                )
        return sections


def run(
    config: schema.Config, pipeline: Optional[SpectralPipeline] = None
) -> Tuple[VerificationReport, int]:
    runner = CheckRunner(config, pipeline)
    report = runner.run(select_groups(config.only))
    return report, runner.exit_code
