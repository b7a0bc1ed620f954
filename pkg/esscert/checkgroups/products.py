# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from typing import List

from esscert import essential
from esscert.checksuite import CheckGroup, CheckGroupMetadata
from esscert.report import Section
from esscert.util import constants


@CheckGroupMetadata(
    name="products",
    order=70,
    description="""
    Products of essential classes reach the last survivor for every omega and
    lambda. Pairwise products over the essential scan are listed, triple products
    vanish.
    """,
    requires=["essential"],
    min_pmax=constants.FULL_SUITE_PMAX,
    min_qmax=constants.FULL_SUITE_QMAX,
)
class EssentialProducts(CheckGroup):
    def run(self) -> List[Section]:
        return [
            essential.verify_products(self.pipeline),
            essential.pairwise_product_scan(self.pipeline),
        ]
