# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from time import perf_counter


class Timer:
    """
    Measures from creation. The first call of elapsed freezes the value, so a timer
    logged twice shows the same duration.
    """

    def __init__(self) -> None:
        self._start = perf_counter()
        self._stopped_at = 0.0

    def elapsed(self) -> float:
        if not self._stopped_at:
            self._stopped_at = perf_counter()
        return self._stopped_at - self._start

    def __str__(self) -> str:
        return f"{self.elapsed():.3f} sec"


def create_timer() -> Timer:
    return Timer()
