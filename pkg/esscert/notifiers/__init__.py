# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from esscert.notifiers.console import Console
from esscert.notifiers.text_result import TextResult

__all__ = ["Console", "TextResult"]
