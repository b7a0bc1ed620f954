# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import List

from esscert import sseq
from esscert.checksuite import CheckGroup, CheckGroupMetadata
from esscert.report import Section
from esscert.util import constants


@CheckGroupMetadata(
    name="einf",
    order=40,
    description="""
    The homology of d5 is the E-infinity page. Its dimensions modulo the
    parameters are compared with the published table, the parameter complements
    are checked, and the last survivor is located at (8, 6).
    """,
    requires=["e4"],
    min_pmax=constants.FULL_SUITE_PMAX,
    min_qmax=constants.FULL_SUITE_QMAX,
)
class EInfinityPage(CheckGroup):
    def run(self) -> List[Section]:
        _, survivor = sseq.last_survivor(self.pipeline)
        return [sseq.verify_einf(self.pipeline), survivor]


@CheckGroupMetadata(
    name="relations",
    order=50,
    description="""
    The corrected relations at (3, 4) and (4, 6) reduce to zero and span the
    kernel of the formal multiplication.
    """,
    requires=["einf"],
    min_pmax=constants.FULL_SUITE_PMAX,
    min_qmax=constants.FULL_SUITE_QMAX,
)
class CorrectedRelations(CheckGroup):
    def run(self) -> List[Section]:
        return [sseq.verify_corrected_relations(self.pipeline)]
