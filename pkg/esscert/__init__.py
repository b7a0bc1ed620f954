# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from esscert.report import CheckResult, CheckStatus, Section, VerificationReport
from esscert.scalars import Scalar16
from esscert.sseq import SpectralPipeline
from esscert.util import (
    CheckFailedException,
    ConfigurationException,
    DomainException,
    EsscertException,
    NotACycleException,
    WindowException,
)
from esscert.util.logger import Logger, init_logger
from esscert.util.perf_timer import create_timer

__all__ = [
    "CheckFailedException",
    "CheckResult",
    "CheckStatus",
    "ConfigurationException",
    "DomainException",
    "EsscertException",
    "Logger",
    "NotACycleException",
    "Scalar16",
    "Section",
    "SpectralPipeline",
    "VerificationReport",
    "WindowException",
    "create_timer",
]


init_logger()
