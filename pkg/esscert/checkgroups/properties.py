# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import List

from esscert import essential, sseq
from esscert.checksuite import CheckGroup, CheckGroupMetadata
from esscert.report import Section
from esscert.util import constants


@CheckGroupMetadata(
    name="properties",
    order=90,
    description="""
    Structural invariants on random samples: d o d = 0, the differentials commute
    with F and keep the weight, the product rule of N, the page presentations, and
    the closure properties of essential classes.
    """,
    requires=["essential"],
    min_pmax=constants.FULL_SUITE_PMAX,
    min_qmax=constants.FULL_SUITE_QMAX,
)
class StructuralProperties(CheckGroup):
    def run(self) -> List[Section]:
        seed = self.config.seed
        return [
            sseq.check_square_zero(self.pipeline),
            sseq.check_equivariance(
                self.pipeline, self.config.equivariance_samples, seed
            ),
            sseq.check_norm_product_rule(
                self.pipeline, self.config.product_rule_samples, seed
            ),
            sseq.check_presentations(self.pipeline),
            essential.check_essential_properties(
                self.pipeline, constants.DEFAULT_ESSENTIAL_SAMPLES, seed
            ),
        ]
