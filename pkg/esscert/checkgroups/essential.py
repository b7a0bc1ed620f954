# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import List

from esscert import essential
from esscert.checksuite import CheckGroup, CheckGroupMetadata
from esscert.report import Section
from esscert.util import constants


@CheckGroupMetadata(
    name="essential",
    order=60,
    description="""
    The degree one classes, the divisibility lemmas for every admissible scalar,
    and the scan of essential classes in the quotient by the parameters.
    """,
    requires=["einf"],
    min_pmax=constants.FULL_SUITE_PMAX,
    min_qmax=constants.FULL_SUITE_QMAX,
)
class EssentialClasses(CheckGroup):
    def run(self) -> List[Section]:
        sections = essential.verify_essential_lemmas(self.pipeline, self.config.seed)
        counts, scan = essential.essential_scan(self.pipeline)
        self.log.debug(f"essential dimensions by degree: {counts}")
        sections.append(scan)
        return sections
