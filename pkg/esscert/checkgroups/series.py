# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import List

from esscert import series
from esscert.checksuite import CheckGroup, CheckGroupMetadata
from esscert.report import Section
from esscert.util import constants


@CheckGroupMetadata(
    name="series",
    order=80,
    description="""
    The Poincare series numerator, its functional equation, the cup product
    pairing, the parameters defined over F2, and the comparison with the earlier
    listing.
    """,
    requires=["einf"],
    min_pmax=constants.FULL_SUITE_PMAX,
    min_qmax=constants.FULL_SUITE_QMAX,
)
class PoincareSeriesGroup(CheckGroup):
    def run(self) -> List[Section]:
        poincare, sections = series.verify_series(self.pipeline)
        self.log.info(f"P(t) = {poincare.to_text()}")
        return sections
