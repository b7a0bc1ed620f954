# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import List

from esscert import group_model, sseq
from esscert.checksuite import CheckGroup, CheckGroupMetadata
from esscert.report import Section
from esscert.util.perf_timer import create_timer


@CheckGroupMetadata(
    name="group",
    order=10,
    description="""
    The 64 element group and the torus: order, closure, inverses, the matrix law,
    the center and the quotient by it, element orders, and the eigenvalues of T.
    The field identities used later are checked here too.
    """,
)
class GroupStructure(CheckGroup):
    def run(self) -> List[Section]:
        timer = create_timer()
        section = group_model.verify_group(seed=self.config.seed)
        self.log.info(f"checked the group model in {timer}")
        return [section]


@CheckGroupMetadata(
    name="e3",
    order=20,
    description="""
    E2 is built as a free algebra, d2 is applied, and its homology is compared with
    the published presentation of E3 on the E3 sub-window.
    """,
    requires=["group"],
)
class E3Page(CheckGroup):
    def run(self) -> List[Section]:
        sseq.build_e2(self.pipeline)
        return [sseq.verify_e3(self.pipeline)]


@CheckGroupMetadata(
    name="e4",
    order=30,
    description="""
    The homology of d3 is compared with the presentation of E4, the published
    values of d3 and d5 are spot checked, and E4 = E5 follows from the vanishing
    of odd rows.
    """,
    requires=["e3"],
)
class E4Page(CheckGroup):
    def run(self) -> List[Section]:
        return [
            sseq.verify_e4(self.pipeline),
            sseq.verify_differential_tables(self.pipeline),
            sseq.verify_e4_equals_e5(self.pipeline),
        ]
