# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from fractions import Fraction
from unittest import TestCase

from assertpy import assert_that

from esscert import definitions, series
from esscert.series import PoincareSeries, numerator_from_dimensions
from selftests.test_sseq import get_shared_pipeline


class PoincareSeriesTestCase(TestCase):
    def test_published_numerator(self) -> None:
        poincare = PoincareSeries(list(definitions.POINCARE_NUMERATOR))
        self.assertEqual(14, poincare.degree)
        assert_that(poincare.is_palindromic()).is_true()
        self.assertEqual(148, sum(poincare.numerator))
        self.assertEqual([8, 8], poincare.denominator_degrees)

    def test_text(self) -> None:
        text = PoincareSeries(list(definitions.POINCARE_NUMERATOR)).to_text()
        assert_that(text).starts_with("(1 + 4t + 8t^2 + 10t^3").ends_with(
            "+ 4t^13 + t^14)/(1 - t^8)^2"
        )
        self.assertEqual(
            "(1 + t^2)/(1 - t^4)(1 - t^2)", PoincareSeries([1, 0, 1], [4, 2]).to_text()
        )

    def test_evaluate(self) -> None:
        value = PoincareSeries([1, 1], [1]).evaluate(Fraction(1, 2))
        self.assertEqual(Fraction(3), value)
        poincare = PoincareSeries(list(definitions.POINCARE_NUMERATOR))
        t = Fraction(3)
        self.assertEqual(t**2 * poincare.evaluate(t), poincare.evaluate(1 / t))

    def test_not_palindromic(self) -> None:
        assert_that(PoincareSeries([1, 2, 3]).is_palindromic()).is_false()

    def test_to_dict(self) -> None:
        data = PoincareSeries([1, 2, 1]).to_dict()  # type: ignore
        self.assertEqual({"numerator": [1, 2, 1], "denominator_degrees": [8, 8]}, data)

    def test_numerator_from_dimensions(self) -> None:
        dimensions = {(0, 0): 1, (1, 0): 4, (0, 1): 2, (3, 0): 5}
        self.assertEqual([1, 6], numerator_from_dimensions(dimensions, 1))
        self.assertEqual(
            definitions.POINCARE_NUMERATOR,
            numerator_from_dimensions(
                definitions.EINF_QUOTIENT_DIMENSIONS, definitions.FORMAL_DIMENSION
            ),
        )


class SeriesChecksTestCase(TestCase):
    def test_numerator(self) -> None:
        numerator, section = series.poincare_numerator(get_shared_pipeline())
        self.assertEqual(definitions.POINCARE_NUMERATOR, numerator)
        assert_that(section.failed_ids()).is_empty()
        published = next(
            x for x in section.results if x.id == "series.numerator.published_sum"
        )
        assert_that(published.message).contains("136", "148")

    def test_pairing(self) -> None:
        pipeline = get_shared_pipeline()
        self.assertEqual((1, 1), series.pairing_rank(pipeline, 0))
        for degree in series.PAIRING_DEGREES:
            rank, dimension = series.pairing_rank(pipeline, degree)
            self.assertEqual(dimension, rank)
            self.assertEqual(definitions.POINCARE_NUMERATOR[degree], dimension)

    def test_verify_series(self) -> None:
        poincare, sections = series.verify_series(get_shared_pipeline())
        self.assertEqual(definitions.POINCARE_NUMERATOR, poincare.numerator)
        prefixes = [x.prefix for x in sections]
        self.assertEqual(
            [
                "series.numerator",
                "series.duality",
                "series.parameters",
                "series.discrepancies",
            ],
            prefixes,
        )
        for section in sections:
            assert_that(section.failed_ids()).is_empty()

    def test_discrepancies(self) -> None:
        section = series.clark_discrepancy_report(
            get_shared_pipeline(), list(definitions.POINCARE_NUMERATOR)
        )
        assert_that(section.failed_ids()).is_empty()
        t7 = next(
            x for x in section.results if x.id == "series.discrepancies.numerator.t7"
        )
        self.assertEqual({"computed": 20, "listed": 18}, t7.witness)
