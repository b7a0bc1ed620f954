# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import functools
import json
import sys
from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from esscert import essential as essential_checks
from esscert import group_model, notifier, notifiers, runner, schema  # noqa: F401
from esscert import series as series_checks
from esscert.checksuite import get_groups_metadata
from esscert.parameter_parser.config import ConfigBuilder
from esscert.report import Section, VerificationReport
from esscert.sseq import SpectralPipeline, render_table
from esscert.util import constants, hookspec, plugin_manager
from esscert.util.logger import get_logger
from esscert.util.perf_timer import create_timer

_get_init_logger = functools.partial(get_logger, "init")

# command line options that overwrite fields of the config.
CONFIG_OPTIONS = ["pmax", "qmax", "format", "only", "seed", "concurrency"]


def load_config(args: Namespace) -> schema.Config:
    overrides = {name: getattr(args, name, None) for name in CONFIG_OPTIONS}
    return ConfigBuilder.from_path(getattr(args, "config", None), overrides)


def write_output(args: Namespace, text: str) -> None:
    out: Optional[Path] = getattr(args, "out", None)
    if out:
        out.write_text(f"{text}\n", encoding="utf-8")
        _get_init_logger("output").info(f"report is written to {out.absolute()}")
    else:
        # logs go to stderr, the report must be complete before the next record.
        sys.stdout.write(f"{text}\n")
        sys.stdout.flush()


def render_report(
    report: VerificationReport,
    config: schema.Config,
    header: Optional[List[str]] = None,
    extra: Optional[Dict[str, Any]] = None,
) -> str:
    if config.format == constants.FORMAT_JSON:
        data: Dict[str, Any] = dict(extra) if extra else {}
        data.update(report.to_dict_checked())
        return json.dumps(data, indent=2, ensure_ascii=False)
    lines = list(header) if header else []
    lines.append(report.to_text())
    return "\n".join(lines)


def run_checks(
    config: schema.Config, groups: List[str]
) -> Tuple[VerificationReport, runner.CheckRunner]:
    selected = runner.select_groups(groups)
    notifier.initialize(runbooks=list(config.notifier))
    notifier.notify(
        notifier.RunMessage(
            status=notifier.RunStatus.RUNNING,
            groups=[x.name for x in selected],
            run_name=constants.RUN_NAME,
        )
    )

    run_status = notifier.RunStatus.FAILED
    run_timer = create_timer()
    run_error_message = ""
    try:
        check_runner = runner.CheckRunner(config)
        report = check_runner.run(selected)
        if report.passed:
            run_status = notifier.RunStatus.SUCCESS
    except Exception as identifier:
        run_error_message = str(identifier)
        raise identifier
    finally:
        run_message = notifier.RunMessage(
            status=run_status, elapsed=run_timer.elapsed(), message=run_error_message
        )
        notifier.notify(run_message)
        notifier.finalize()
        run_finalize()

    return report, check_runner


def run_finalize() -> None:
    try:
        plugin_manager.hook.on_run_finalize()
    except Exception as exception:
        log = _get_init_logger("run_finalize")
        log.info(f"run_finalize failed with error {exception}")


def _prepare(args: Namespace, group: str) -> Tuple[schema.Config, SpectralPipeline]:
    config = load_config(args)
    get_groups_metadata()[group].check_window(config)
    return config, runner.create_pipeline(config)


def _finish(
    args: Namespace,
    config: schema.Config,
    sections: List[Section],
    header: Optional[List[str]] = None,
    extra: Optional[Dict[str, Any]] = None,
) -> int:
    report = VerificationReport.from_sections(sections)
    write_output(args, render_report(report, config, header, extra))
    return runner.exit_code_of(report)


def verify(args: Namespace) -> int:
    config = load_config(args)
    groups = list(args.groups) if args.groups else config.only
    report, check_runner = run_checks(config, groups)
    write_output(args, render_report(report, config))
    return check_runner.exit_code


def dims(args: Namespace) -> int:
    page: str = getattr(args, "page", constants.PAGE_EINF)
    if page == constants.PAGE_EINF:
        config, pipeline = _prepare(args, constants.PAGE_EINF)
    else:
        config = load_config(args)
        pipeline = runner.create_pipeline(config)
    table = pipeline.dimension_table(page)
    if page == constants.PAGE_EINF:
        # the published layout, the quotient vanishes outside of it.
        pmax = qmax = constants.EINF_TABLE_SIZE
    else:
        pmax = max(p for p, _ in table)
        qmax = max(q for _, q in table)

    if config.format == constants.FORMAT_JSON:
        text = json.dumps(
            {
                "page": page,
                "dimensions": [[p, q, d] for (p, q), d in sorted(table.items())],
            },
            indent=2,
        )
    else:
        text = "\n".join(render_table(table, pmax, qmax))
    write_output(args, text)
    return constants.EXIT_PASS


def _check_lines(results: List[essential_checks.EssentialWitnessSet]) -> List[str]:
    lines = []
    for result in results:
        state = "essential" if result.is_essential else "not essential"
        lines.append(f"{result.element} at {tuple(result.bidegree)}: {state}")
        for divisor, witness in result.witnesses.items():
            lines.append(f"    N({divisor}*a1) * ({witness})")
        if result.failed_divisor:
            lines.append(f"    not divisible by N({result.failed_divisor}*a1)")
    return lines


def essential(args: Namespace) -> int:
    """
    Without --check the scan always runs. With --check it runs only when --scan
    is given too, and the checked elements are added to the scan report.
    """
    config, pipeline = _prepare(args, "essential")
    expressions: List[str] = getattr(args, "expressions", None) or []
    results = (
        essential_checks.check_expression(pipeline, expressions) if expressions else []
    )
    if expressions and not getattr(args, "scan", False):
        if config.format == constants.FORMAT_JSON:
            text = json.dumps([x.to_dict() for x in results], indent=2)
        else:
            text = "\n".join(_check_lines(results))
        write_output(args, text)
        return constants.EXIT_PASS

    counts, section = essential_checks.essential_scan(pipeline)
    header = [f"degree {n:>2}: {count}" for n, count in sorted(counts.items())]
    extra: Dict[str, Any] = {
        "dimensions": {str(n): count for n, count in sorted(counts.items())}
    }
    if results:
        header.extend(_check_lines(results))
        extra["checks"] = [x.to_dict() for x in results]
    return _finish(args, config, [section], header, extra)



def products(args: Namespace) -> int:
    config, pipeline = _prepare(args, "products")
    sections = [essential_checks.verify_products(pipeline)]
    if getattr(args, "all_products", False):
        sections.append(essential_checks.pairwise_product_scan(pipeline))
    return _finish(args, config, sections)


def series(args: Namespace) -> int:
    config, pipeline = _prepare(args, "series")
    poincare, sections = series_checks.verify_series(pipeline)
    return _finish(
        args,
        config,
        sections,
        [f"P(t) = {poincare.to_text()}"],
        {"series": poincare.to_dict()},
    )


def group(args: Namespace) -> int:
    config = load_config(args)
    return _finish(args, config, [group_model.verify_group(seed=config.seed)])


def report(args: Namespace) -> int:
    config = load_config(args)
    verification, check_runner = run_checks(config, config.only)
    certificate: Optional[Path] = getattr(args, "certificate", None)
    if certificate:
        data = {
            "report": verification.to_dict_checked(),
            "certificate": check_runner.pipeline.certificate(),
        }
        certificate.write_text(json.dumps(data, indent=2), encoding="utf-8")
        _get_init_logger("report").info(
            f"certificate is written to {certificate.absolute()}"
        )
    write_output(args, render_report(verification, config))
    return check_runner.exit_code


class CommandHookSpec:
    @hookspec
    def on_run_finalize(self) -> None:
        """
        Take action when a run is being finalized
        """
        ...


plugin_manager.add_hookspecs(CommandHookSpec)
