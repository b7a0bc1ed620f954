# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from pathlib import Path

RUN_ID = ""
RUN_NAME = ""

# The physical path of current run. All logs and result files of current run are
# in this folder.
RUN_LOCAL_PATH: Path = Path()

# window
DEFAULT_PMAX = 16
DEFAULT_QMAX = 12
DEFAULT_E3_PMAX = 6
DEFAULT_E3_QMAX = 4
# the published E-infinity table, rows and columns 0 ... 8
EINF_TABLE_SIZE = 8
# the proofs touch E5 at q = 10 and products land in total degree 14.
FULL_SUITE_PMAX = 14
FULL_SUITE_QMAX = 10

# report formats
FORMAT_TEXT = "text"
FORMAT_JSON = "json"

# check status values
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_INFO = "info"

# pages
PAGE_E2 = "e2"
PAGE_E3 = "e3"
PAGE_E4 = "e4"
PAGE_EINF = "einf"

# notifier
NOTIFIER_CONSOLE = "console"
NOTIFIER_TEXT_RESULT = "text_result"

# samples
DEFAULT_SEED = 0
DEFAULT_EQUIVARIANCE_SAMPLES = 500
DEFAULT_PRODUCT_RULE_SAMPLES = 1000
DEFAULT_ESSENTIAL_SAMPLES = 100
DEFAULT_GROUP_TIMEOUT = 600

# exit codes
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# all check groups
GROUP_ALL = "all"
