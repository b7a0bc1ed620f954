# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from unittest import TestCase

import numpy as np
from assertpy import assert_that

from esscert import group_model
from esscert.group_model import (
    IDENTITY,
    GroupElement,
    TorusPower,
    center,
    compose,
    element_order,
    enumerate_group,
    from_matrix,
    group_inverse,
    is_frobenius_closed,
    power,
    quotient_structure,
    torus_conjugate,
    torus_eigenvalues,
)
from esscert.report import CheckStatus
from esscert.scalars import ONE, ZERO, Scalar16, all_scalars
from esscert.util import DomainException


def _zeta_set(*exponents: int) -> set:
    return {Scalar16.zeta_power(x) for x in exponents}


class EnumerationTestCase(TestCase):
    def test_order(self) -> None:
        elements = enumerate_group()
        assert_that(elements).is_length(64).contains(IDENTITY)
        assert_that(list(elements)).is_sorted()

    def test_four_per_column(self) -> None:
        for a in all_scalars():
            count = sum(1 for g in enumerate_group() if g.a == a)
            self.assertEqual(4, count, f"a = {a}")

    def test_membership(self) -> None:
        assert_that(GroupElement).raises(DomainException).when_called_with(ONE, ZERO)

    def test_render(self) -> None:
        self.assertEqual("(0,0)", str(IDENTITY))


class CompositionTestCase(TestCase):
    def test_identity(self) -> None:
        for g in enumerate_group():
            self.assertEqual(g, compose(g, IDENTITY))
            self.assertEqual(g, compose(IDENTITY, g))

    def test_square(self) -> None:
        for g in enumerate_group():
            self.assertEqual(GroupElement(ZERO, g.a**5), compose(g, g))

    def test_inverse_law(self) -> None:
        for g in enumerate_group():
            self.assertEqual(GroupElement(g.a, g.b + g.a**5), group_inverse(g))
        assert_that(group_model.check_inverses()).is_true()

    def test_closure_and_matrix_law(self) -> None:
        assert_that(group_model.check_closure()).is_true()
        assert_that(group_model.check_matrix_law()).is_empty()

    def test_associativity(self) -> None:
        assert_that(group_model.check_associativity(2000, 0)).is_empty()

    def test_from_matrix(self) -> None:
        for g in enumerate_group():
            self.assertEqual(g, from_matrix(g.matrix()))
        matrix = IDENTITY.matrix()
        matrix[1, 0] = 1
        assert_that(from_matrix).raises(DomainException).when_called_with(matrix)

    def test_power(self) -> None:
        g = next(x for x in enumerate_group() if x.a)
        self.assertEqual(IDENTITY, power(g, 4))
        self.assertEqual(compose(g, g), power(g, 2))


class CenterTestCase(TestCase):
    def test_center(self) -> None:
        central = center()
        assert_that(central).is_length(4).contains(IDENTITY)
        for g in central:
            self.assertEqual(ZERO, g.a)
            self.assertEqual(g.b, g.b**4)
            assert_that(element_order(g)).is_less_than_or_equal_to(2)

    def test_commutators(self) -> None:
        assert_that(group_model.check_commutators_central()).is_true()


class OrderTestCase(TestCase):
    def test_orders(self) -> None:
        self.assertEqual(1, element_order(IDENTITY))
        for g in enumerate_group():
            if g.is_identity:
                continue
            expected = 4 if g.a else 2
            self.assertEqual(expected, element_order(g), str(g))

    def test_quotient(self) -> None:
        structure = quotient_structure()
        self.assertEqual(16, structure.order)
        self.assertEqual(4, structure.coset_size)
        self.assertEqual(4, structure.rank)
        assert_that(structure.squares_central).is_true()
        assert_that(structure.is_elementary_abelian).is_true()


class TorusTestCase(TestCase):
    def test_trivial_powers(self) -> None:
        for g in enumerate_group():
            self.assertEqual(g, torus_conjugate(g, TorusPower(0)))
            self.assertEqual(g, torus_conjugate(g, TorusPower(15)))

    def test_closed_form_matches_matrices(self) -> None:
        # torus_conjugate raises on a mismatch
        for k in range(15):
            for g in enumerate_group():
                image = torus_conjugate(g, TorusPower(k))
                assert_that(enumerate_group()).contains(image)

    def test_order_and_determinant(self) -> None:
        self.assertEqual(15, group_model.torus_order())
        self.assertEqual(ONE, group_model.torus_determinant())
        np.testing.assert_array_equal(
            TorusPower(16).matrix(), TorusPower(1).matrix()
        )

    def test_automorphism(self) -> None:
        assert_that(group_model.check_torus_automorphism()).is_true()

    def test_eigenvalues(self) -> None:
        quotient, central = torus_eigenvalues()
        self.assertEqual(_zeta_set(1, 2, 4, 8), quotient)
        self.assertEqual(_zeta_set(5, 10), central)
        assert_that(is_frobenius_closed(quotient)).is_true()
        assert_that(is_frobenius_closed(central)).is_true()
        assert_that(is_frobenius_closed(_zeta_set(1, 2))).is_false()


class GroupReportTestCase(TestCase):
    def test_report(self) -> None:
        section = group_model.verify_group(samples=500, seed=1)
        assert_that(section.failed_ids()).is_empty()
        ids = [x.id for x in section.results]
        assert_that(ids).contains(
            "group.order", "group.center.size", "group.torus.eigenvalues.quotient"
        )
        convention = [x for x in section.results if x.status == CheckStatus.INFO]
        assert_that(convention).is_not_empty()
