# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

import random
from unittest import TestCase

import numpy as np
from assertpy import assert_that

from esscert import linalg
from esscert.scalars import GF16


def _random_matrix(
    randomizer: random.Random, rows: int, columns: int, density: float = 0.6
) -> np.ndarray:
    return np.array(
        [
            [
                randomizer.randrange(16) if randomizer.random() < density else 0
                for _ in range(columns)
            ]
            for _ in range(rows)
        ],
        dtype=np.uint8,
    ).reshape(rows, columns)


class RowReduceTestCase(TestCase):
    def setUp(self) -> None:
        self._randomizer = random.Random(0)

    def test_rank_matches_galois(self) -> None:
        for _ in range(30):
            rows = self._randomizer.randrange(1, 7)
            columns = self._randomizer.randrange(1, 7)
            matrix = _random_matrix(self._randomizer, rows, columns, 0.4)
            expected = int(np.linalg.matrix_rank(GF16(matrix)))
            self.assertEqual(expected, linalg.rank(matrix))

    def test_echelon_form(self) -> None:
        matrix = _random_matrix(self._randomizer, 5, 8)
        reduced, pivots = linalg.row_reduce(matrix)
        self.assertEqual(len(pivots), reduced.shape[0])
        assert_that(pivots).is_sorted()
        for row, pivot in enumerate(pivots):
            self.assertEqual(1, reduced[row, pivot])
            self.assertEqual(1, int(np.count_nonzero(reduced[:, pivot])))
            assert_that(reduced[row, :pivot].any()).is_false()
        assert_that(linalg.same_row_space(matrix, reduced)).is_true()

    def test_empty(self) -> None:
        self.assertEqual(0, linalg.rank(linalg.zeros(0, 3)))
        self.assertEqual((0, 4), linalg.as_matrix([], 4).shape)
        self.assertEqual(0, linalg.rank(linalg.zeros(3, 3)))

    def test_not_a_matrix(self) -> None:
        assert_that(linalg.row_reduce).raises(ValueError).when_called_with(
            np.zeros(3, dtype=np.uint8)
        )


class KernelTestCase(TestCase):
    def setUp(self) -> None:
        self._randomizer = random.Random(1)

    def test_null_space(self) -> None:
        for _ in range(20):
            matrix = _random_matrix(self._randomizer, 4, 7)
            kernel = linalg.null_space(matrix)
            self.assertEqual(7 - linalg.rank(matrix), kernel.shape[0])
            self.assertEqual(kernel.shape[0], linalg.rank(kernel))
            product = linalg.matmul(matrix, kernel.T)
            assert_that(product.any()).is_false()

    def test_left_null_space(self) -> None:
        matrix = _random_matrix(self._randomizer, 6, 3)
        kernel = linalg.left_null_space(matrix)
        self.assertEqual(6 - linalg.rank(matrix), kernel.shape[0])
        assert_that(linalg.matmul(kernel, matrix).any()).is_false()


class SolveTestCase(TestCase):
    def setUp(self) -> None:
        self._randomizer = random.Random(2)

    def test_solvable(self) -> None:
        for _ in range(20):
            matrix = _random_matrix(self._randomizer, 4, 6)
            x = _random_matrix(self._randomizer, 1, 4)[0]
            target = linalg.vecmat(x, matrix)
            solution = linalg.solve(matrix, target)
            assert_that(solution).is_not_none()
            assert solution is not None
            np.testing.assert_array_equal(target, linalg.vecmat(solution, matrix))

    def test_not_solvable(self) -> None:
        matrix = np.array([[1, 0, 0], [0, 1, 0]], dtype=np.uint8)
        target = np.array([0, 0, 5], dtype=np.uint8)
        assert_that(linalg.solve(matrix, target)).is_none()

    def test_reduce(self) -> None:
        reduced, pivots = linalg.row_reduce(
            np.array([[1, 2, 0], [0, 0, 1]], dtype=np.uint8)
        )
        vector = np.array([3, 6, 7], dtype=np.uint8)
        # 3 * (1, 2, 0) = (3, 6, 0) by the table
        np.testing.assert_array_equal(
            linalg.scale(3, np.array([1, 2, 0], dtype=np.uint8)),
            np.array([3, 6, 0], dtype=np.uint8),
        )
        assert_that(linalg.in_row_space(vector, reduced, pivots)).is_true()
        other = np.array([0, 1, 0], dtype=np.uint8)
        assert_that(linalg.in_row_space(other, reduced, pivots)).is_false()
        np.testing.assert_array_equal(other, linalg.reduce(other, reduced, pivots))


class SubspaceTestCase(TestCase):
    def test_intersect(self) -> None:
        first = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], dtype=np.uint8)
        second = np.array([[0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]], dtype=np.uint8)
        common = linalg.intersect(first, second)
        expected = np.array([[0, 1, 0, 0], [0, 0, 1, 0]], dtype=np.uint8)
        assert_that(linalg.same_row_space(common, expected)).is_true()
        self.assertEqual(2, common.shape[0])

    def test_intersect_with_empty(self) -> None:
        first = np.array([[1, 2]], dtype=np.uint8)
        self.assertEqual((0, 2), linalg.intersect(first, linalg.zeros(0, 2)).shape)

    def test_same_row_space(self) -> None:
        first = np.array([[1, 2, 3], [0, 1, 4]], dtype=np.uint8)
        second = np.concatenate([first[1:], first[:1] ^ first[1:]], axis=0)
        assert_that(linalg.same_row_space(first, second)).is_true()
        assert_that(linalg.same_row_space(first, first[:1])).is_false()

    def test_matmul_matches_galois(self) -> None:
        randomizer = random.Random(3)
        left = _random_matrix(randomizer, 3, 4)
        right = _random_matrix(randomizer, 4, 5)
        expected = (GF16(left) @ GF16(right)).view(np.ndarray).astype(np.uint8)
        np.testing.assert_array_equal(expected, linalg.matmul(left, right))

    def test_hex_rows(self) -> None:
        matrix = np.array([[1, 15], [10, 0]], dtype=np.uint8)
        self.assertEqual(["1f", "a0"], linalg.to_hex_rows(matrix))

    def test_galois_field(self) -> None:
        self.assertEqual(16, GF16.order)
        self.assertEqual("x^4 + x^3 + 1", str(GF16.irreducible_poly))
