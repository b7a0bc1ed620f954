# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

from unittest import TestCase

from assertpy import assert_that

from esscert.scalars import (
    GF16,
    ONE,
    ORDER,
    ZERO,
    ZETA,
    Scalar16,
    all_scalars,
    degrees_poly,
    f4_units,
    frobenius,
    inverse,
    nonzero_scalars,
    roots,
    solve_artin_schreier,
    trace2,
    trace_zero_units,
    verify_artin_schreier_product,
    verify_trace_factorization,
)
from esscert.util import DomainException


class ScalarArithmeticTestCase(TestCase):
    def test_reduction_rule(self) -> None:
        # z^4 = z^3 + 1
        self.assertEqual(ZETA * ZETA**3, ZETA**3 + ONE)
        self.assertEqual(Scalar16.zeta_power(4).bits, 0b1001)

    def test_zeta_is_primitive(self) -> None:
        powers = {Scalar16.zeta_power(x) for x in range(15)}
        assert_that(powers).is_length(15)
        self.assertEqual(ONE, ZETA**15)
        self.assertEqual(ONE, ZETA**7 * ZETA**8)

    def test_multiply_by_zero(self) -> None:
        for value in all_scalars():
            self.assertEqual(ZERO, value * ZERO)

    def test_table_matches_galois(self) -> None:
        for first in all_scalars():
            for second in all_scalars():
                expected = int(GF16(first.bits) * GF16(second.bits))
                self.assertEqual(expected, (first * second).bits)

    def test_field_laws(self) -> None:
        values = all_scalars()
        for a in values:
            for b in values:
                self.assertEqual(a * b, b * a)
                for c in values[::5]:
                    self.assertEqual((a * b) * c, a * (b * c))
                    self.assertEqual(a * (b + c), a * b + a * c)

    def test_inverse(self) -> None:
        self.assertEqual(ONE, inverse(ONE))
        self.assertEqual(Scalar16.zeta_power(14), inverse(ZETA))
        for value in nonzero_scalars():
            self.assertEqual(ONE, value * inverse(value))

    def test_inverse_of_zero(self) -> None:
        assert_that(inverse).raises(DomainException).when_called_with(ZERO)
        assert_that(ZERO.__pow__).raises(DomainException).when_called_with(-1)

    def test_bits_out_of_range(self) -> None:
        assert_that(Scalar16).raises(DomainException).when_called_with(ORDER)

    def test_characteristic_two(self) -> None:
        for value in all_scalars():
            self.assertEqual(ZERO, value + value)
            self.assertEqual(value, -value)


class FrobeniusTestCase(TestCase):
    def test_examples(self) -> None:
        self.assertEqual(ONE, frobenius(ONE))
        self.assertEqual(Scalar16.zeta_power(10), frobenius(Scalar16.zeta_power(5)))

    def test_order_four(self) -> None:
        for value in all_scalars():
            image = value
            for _ in range(4):
                image = frobenius(image)
            self.assertEqual(value, image)

    def test_fixed_fields(self) -> None:
        fixed = [x for x in all_scalars() if frobenius(x) == x]
        assert_that(fixed).is_equal_to([ZERO, ONE])
        fixed_by_square = {x for x in all_scalars() if frobenius(frobenius(x)) == x}
        assert_that(fixed_by_square).is_equal_to({ZERO, *f4_units()})

    def test_automorphism(self) -> None:
        for a in all_scalars():
            for b in all_scalars():
                self.assertEqual(frobenius(a * b), frobenius(a) * frobenius(b))
                self.assertEqual(frobenius(a + b), frobenius(a) + frobenius(b))


class TraceTestCase(TestCase):
    def test_examples(self) -> None:
        self.assertEqual(1, trace2(ZETA))
        self.assertEqual(0, trace2(ZERO))
        self.assertEqual(0, trace2(ONE))

    def test_fibers(self) -> None:
        values = [trace2(x) for x in all_scalars()]
        self.assertEqual(8, values.count(0))
        self.assertEqual(8, values.count(1))

    def test_linear(self) -> None:
        for a in all_scalars():
            for b in all_scalars():
                self.assertEqual(trace2(a) ^ trace2(b), trace2(a + b))

    def test_polynomial_identities(self) -> None:
        assert_that(verify_trace_factorization()).is_true()
        assert_that(verify_artin_schreier_product()).is_true()


class RootsTestCase(TestCase):
    def test_trace_polynomial(self) -> None:
        found = roots(degrees_poly([8, 4, 2, 1]))
        assert_that(found).is_length(8).contains(ZERO)
        for a in found:
            for b in found:
                assert_that(found).contains(a + b)
        self.assertEqual({x for x in all_scalars() if trace2(x) == 0}, found)

    def test_trace_zero_units(self) -> None:
        found = roots(degrees_poly([7, 3, 1, 0]))
        assert_that(found).is_length(7).does_not_contain(ZERO)
        for value in found:
            self.assertEqual(0, trace2(value))
        self.assertEqual(sorted(found), trace_zero_units())

    def test_linear_polynomial(self) -> None:
        self.assertEqual({ONE}, roots([ONE, ONE]))

    def test_zero_polynomial(self) -> None:
        assert_that(roots).raises(DomainException).when_called_with([0, 0])


class ArtinSchreierTestCase(TestCase):
    def test_zero(self) -> None:
        self.assertEqual(ZERO, solve_artin_schreier(ZERO))

    def test_trace_one(self) -> None:
        for value in all_scalars():
            if trace2(value):
                assert_that(solve_artin_schreier(value)).is_none()

    def test_trace_zero_units(self) -> None:
        for value in trace_zero_units():
            mu = solve_artin_schreier(value)
            assert_that(mu).is_not_none()
            assert mu is not None
            self.assertEqual(value, mu * mu + mu)
            # the smaller of mu and mu + 1
            assert_that(mu.bits).is_less_than((mu + ONE).bits)


class ScalarTextTestCase(TestCase):
    def test_render(self) -> None:
        self.assertEqual("0", str(ZERO))
        self.assertEqual("1", str(ONE))
        self.assertEqual("z", str(ZETA))
        self.assertEqual("z^7", str(Scalar16.zeta_power(7)))
        self.assertEqual("9", Scalar16.zeta_power(4).to_hex())

    def test_parse(self) -> None:
        self.assertEqual(Scalar16.zeta_power(7), Scalar16.parse("z^7"))
        self.assertEqual(Scalar16.zeta_power(14), Scalar16.parse("z^-1"))
        self.assertEqual(ZETA, Scalar16.parse("z"))
        self.assertEqual(Scalar16(11), Scalar16.parse("b"))

    def test_parse_rendered(self) -> None:
        for value in all_scalars():
            self.assertEqual(value, Scalar16.parse(value.to_hex()))
            self.assertEqual(value, Scalar16.parse(value.to_power()))

    def test_parse_error(self) -> None:
        assert_that(Scalar16.parse).raises(DomainException).when_called_with("g")
        assert_that(Scalar16.parse).raises(DomainException).when_called_with("1z")

    def test_log(self) -> None:
        self.assertEqual(3, Scalar16.zeta_power(3).log)
        with self.assertRaises(DomainException):
            ZERO.log
