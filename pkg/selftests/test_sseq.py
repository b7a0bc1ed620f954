# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from functools import lru_cache
from unittest import TestCase

from assertpy import assert_that

from esscert import definitions, sseq
from esscert.bigraded import is_frobenius_stable
from esscert.report import Section
from esscert.sseq import SpectralPipeline, render_table
from esscert.util import EsscertException, constants


@lru_cache(maxsize=None)
def get_small_pipeline() -> SpectralPipeline:
    return SpectralPipeline(pmax=8, qmax=6)


@lru_cache(maxsize=None)
def get_shared_pipeline() -> SpectralPipeline:
    """
    The window the full suite needs. It's expensive, so test cases share it.
    """
    return SpectralPipeline(
        pmax=constants.FULL_SUITE_PMAX, qmax=constants.FULL_SUITE_QMAX
    )


class RenderTableTestCase(TestCase):
    def test_render(self) -> None:
        lines = render_table({(0, 0): 1, (1, 0): 4, (0, 1): -1}, 1, 1)
        self.assertEqual(
            [" 1 |  ?   ", " 0 |  1  4", "   +------", "      0  1"], lines
        )

    def test_width(self) -> None:
        lines = render_table({(0, 0): 12}, 0, 0, width=4)
        self.assertEqual(" 0 |  12", lines[0])


class PipelineTestCase(TestCase):
    def test_windows(self) -> None:
        pipeline = SpectralPipeline(pmax=4, qmax=2)
        self.assertEqual(4, pipeline.e3_pmax)
        self.assertEqual(2, pipeline.e3_qmax)
        self.assertEqual((6, 3), pipeline.e2_space.window)
        self.assertEqual((7, 4), pipeline.e3_space.window)
        self.assertEqual((4, 2), pipeline.e5_space.window)
        assert_that(pipeline.shared).is_empty()
        assert_that(pipeline.bidegrees()).is_length(5 * 3)

    def test_parameters(self) -> None:
        pipeline = SpectralPipeline(pmax=4, qmax=2)
        first, second = pipeline.parameters()
        self.assertEqual(definitions.E5_TABLE.parse("u5_4^2"), first)
        self.assertEqual(definitions.E5_TABLE.parse("u10_4^2"), second)
        for parameter in pipeline.rational_parameters():
            assert_that(is_frobenius_stable(parameter)).is_true()

    def test_contexts(self) -> None:
        pipeline = SpectralPipeline(pmax=4, qmax=2)
        self.assertEqual(pipeline.h2, pipeline.context(constants.PAGE_E2))
        self.assertEqual(pipeline.h3, pipeline.context(constants.PAGE_E3))
        self.assertEqual(pipeline.einf_mod, pipeline.context(constants.PAGE_EINF))
        assert_that(sseq.build_e2(pipeline)).is_same_as(pipeline.e2_space)

    def test_dimension_tables(self) -> None:
        pipeline = get_small_pipeline()
        self.assertEqual(10, pipeline.dimension_table(constants.PAGE_E2)[(2, 0)])
        self.assertEqual(12, pipeline.dimension_table(constants.PAGE_E3)[(3, 0)])
        e4 = pipeline.dimension_table(constants.PAGE_E4)
        self.assertEqual(8, e4[(4, 0)])
        self.assertEqual(4, e4[(2, 2)])
        einf = pipeline.dimension_table(constants.PAGE_EINF)
        self.assertEqual(12, einf[(3, 4)])
        self.assertEqual(-1, einf[(8, 6)])
        assert_that(pipeline.dimension_table).raises(
            EsscertException
        ).when_called_with("e7")

    def test_certificate(self) -> None:
        certificate = SpectralPipeline(pmax=3, qmax=2).certificate()
        self.assertEqual([3, 2], certificate["window"])
        self.assertEqual([3, 2], certificate["e3_window"])
        assert_that(certificate["pages"]).is_length(2)
        assert_that(certificate["differentials"]).is_length(3)


class SmallWindowTestCase(TestCase):
    def _assert_passed(self, section: Section) -> None:
        assert_that(section.failed_ids()).is_empty()
        assert_that(section.results).is_not_empty()

    def test_e3(self) -> None:
        self._assert_passed(sseq.verify_e3(get_small_pipeline()))

    def test_e4(self) -> None:
        self._assert_passed(sseq.verify_e4(get_small_pipeline()))

    def test_differential_tables(self) -> None:
        self._assert_passed(sseq.verify_differential_tables(get_small_pipeline()))

    def test_e4_equals_e5(self) -> None:
        section = sseq.verify_e4_equals_e5(get_small_pipeline())
        self._assert_passed(section)
        ids = [x.id for x in section.results]
        assert_that(ids).contains("e5.odd_rows_vanish", "e5.dimension.3-1")

    def test_properties(self) -> None:
        pipeline = get_small_pipeline()
        self._assert_passed(sseq.check_square_zero(pipeline))
        self._assert_passed(sseq.check_equivariance(pipeline, samples=50, seed=1))
        self._assert_passed(sseq.check_norm_product_rule(pipeline, samples=50))
        self._assert_passed(sseq.check_presentations(pipeline))

    def test_survivor_outside_window(self) -> None:
        xi, section = sseq.last_survivor(get_small_pipeline())
        assert_that(xi).is_none()
        self.assertEqual(["einf.survivor.dimension"], section.failed_ids())


class FullWindowTestCase(TestCase):
    def test_einf(self) -> None:
        section = sseq.verify_einf(get_shared_pipeline())
        assert_that(section.failed_ids()).is_empty()
        ids = [x.id for x in section.results]
        assert_that(ids).contains(
            "einf.quotient_dimensions",
            "einf.dimension.3-4",
            "einf.dimension.4-6",
            "einf.dimension.8-6",
            "einf.degeneration",
            "einf.free_over_parameters",
        )
        assert_that(ids).does_not_contain(
            "einf.generators.u5_4.cycle", "einf.generators.u10_4.cycle"
        )
        assert_that(ids).contains("einf.generators.u5_8.cycle")

    def test_notation_only_symbols(self) -> None:
        einf = get_shared_pipeline().einf
        for name in definitions.EINF_NOTATION_ONLY:
            assert_that(definitions.EINF_GENERATORS).does_not_contain(name)
            assert_that(einf.is_cycle(definitions.einf(name), (0, 4))).is_false()

    def test_einf_dimensions(self) -> None:
        context = get_shared_pipeline().einf_mod
        for bidegree, expected in definitions.EINF_QUOTIENT_DIMENSIONS.items():
            if context.is_computable(bidegree):
                self.assertEqual(expected, context.dimension(bidegree), bidegree)
        # the listing this corrects has 10
        self.assertNotEqual(
            definitions.CLARK_DIMENSION_34, context.dimension((3, 4))
        )

    def test_relations(self) -> None:
        section = sseq.verify_corrected_relations(get_shared_pipeline())
        assert_that(section.failed_ids()).is_empty()
        count = next(x for x in section.results if x.id == "relations.34.count")
        self.assertEqual(len(definitions.EINF_RELATIONS_34), count.witness["kernel"])

    def test_last_survivor(self) -> None:
        xi, section = sseq.last_survivor(get_shared_pipeline())
        assert_that(section.failed_ids()).is_empty()
        assert xi is not None
        context = get_shared_pipeline().einf_mod
        bidegree = definitions.LAST_SURVIVOR_BIDEGREE
        assert_that(context.is_zero_class(xi, bidegree)).is_false()
        survivor = definitions.einf(definitions.LAST_SURVIVOR)
        assert_that(context.same_class(survivor, xi, bidegree)).is_true()
