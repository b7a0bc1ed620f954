# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
Dense linear algebra over GF(16).

Matrices are uint8 numpy arrays of scalar bit patterns. Addition is XOR and
multiplication goes through the table in esscert.scalars, so every operation is
exact. Vectors are rows: a subspace is given by the rows of a matrix, and the image
of a row vector v under a matrix M is v @ M.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from esscert.scalars import INV, MUL

Pivots = List[int]


def zeros(rows: int, columns: int) -> np.ndarray:
    return np.zeros((rows, columns), dtype=np.uint8)


def as_matrix(rows: Sequence[Sequence[int]], columns: int) -> np.ndarray:
    if not len(rows):
        return zeros(0, columns)
    matrix = np.array(rows, dtype=np.uint8)
    assert matrix.shape[1] == columns, f"expected {columns} columns: {matrix.shape}"
    return matrix


def scale(coefficient: int, vector: np.ndarray) -> np.ndarray:
    return MUL[coefficient, vector]


def row_reduce(matrix: np.ndarray) -> Tuple[np.ndarray, Pivots]:
    """
    Returns the reduced row echelon form without zero rows, and the pivot columns.
    The pivot of a row is its first nonzero column.
    """
    reduced = np.array(matrix, dtype=np.uint8, copy=True)
    if reduced.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {reduced.shape}")
    row_count, column_count = reduced.shape
    pivots: Pivots = []
    row = 0
    for column in range(column_count):
        if row == row_count:
            break
        candidates = np.nonzero(reduced[row:, column])[0]
        if candidates.size == 0:
            continue
        pivot_row = row + int(candidates[0])
        if pivot_row != row:
            reduced[[row, pivot_row]] = reduced[[pivot_row, row]]
        pivot_inverse = INV[reduced[row, column]]
        if pivot_inverse != 1:
            reduced[row] = MUL[pivot_inverse, reduced[row]]
        factors = reduced[:, column].copy()
        factors[row] = 0
        targets = np.nonzero(factors)[0]
        if targets.size:
            reduced[targets] ^= MUL[factors[targets][:, None], reduced[row][None, :]]
        pivots.append(column)
        row += 1
    return reduced[:row], pivots


def rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix)[1])


def null_space(matrix: np.ndarray) -> np.ndarray:
    """
    Rows spanning {x : matrix @ x = 0}, one row per free column, in column order.
    """
    column_count = matrix.shape[1]
    reduced, pivots = row_reduce(matrix)
    pivot_set = set(pivots)
    free_columns = [x for x in range(column_count) if x not in pivot_set]
    kernel = zeros(len(free_columns), column_count)
    for index, free in enumerate(free_columns):
        kernel[index, free] = 1
        # -x = x in characteristic 2
        for row, pivot in enumerate(pivots):
            kernel[index, pivot] = reduced[row, free]
    return kernel


def left_null_space(matrix: np.ndarray) -> np.ndarray:
    """
    Rows spanning {v : v @ matrix = 0}.
    """
    return null_space(matrix.T)


def reduce(vector: np.ndarray, reduced: np.ndarray, pivots: Pivots) -> np.ndarray:
    """
    The normal form of vector modulo the row space of a reduced echelon matrix: the
    result is zero in every pivot column.
    """
    if not pivots:
        return np.array(vector, dtype=np.uint8, copy=True)
    factors = vector[pivots]
    return vector ^ np.bitwise_xor.reduce(MUL[factors[:, None], reduced], axis=0)


def reduce_rows(rows: np.ndarray, reduced: np.ndarray, pivots: Pivots) -> np.ndarray:
    if not pivots or rows.shape[0] == 0:
        return np.array(rows, dtype=np.uint8, copy=True)
    return rows ^ matmul(rows[:, pivots], reduced)


def in_row_space(vector: np.ndarray, reduced: np.ndarray, pivots: Pivots) -> bool:
    return not reduce(vector, reduced, pivots).any()


def matmul(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    rows, inner = left.shape
    inner_right, columns = right.shape
    if inner != inner_right:
        raise ValueError(f"shape mismatch: {left.shape} @ {right.shape}")
    if inner == 0:
        return zeros(rows, columns)
    products = MUL[left[:, :, None], right[None, :, :]]
    return np.bitwise_xor.reduce(products, axis=1).astype(np.uint8)


def vecmat(vector: np.ndarray, matrix: np.ndarray) -> np.ndarray:
    return matmul(vector[None, :], matrix)[0]


def solve(matrix: np.ndarray, target: np.ndarray) -> Optional[np.ndarray]:
    """
    Returns some x with x @ matrix = target, or None.
    """
    row_count, column_count = matrix.shape
    augmented = np.concatenate(
        [matrix.T, np.asarray(target, dtype=np.uint8)[:, None]], axis=1
    )
    reduced, pivots = row_reduce(augmented)
    if pivots and pivots[-1] == row_count:
        return None
    solution = np.zeros(row_count, dtype=np.uint8)
    for row, pivot in enumerate(pivots):
        solution[pivot] = reduced[row, row_count]
    return solution


def intersect(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """
    Reduced echelon rows of the intersection of two row spaces.
    """
    if first.shape[0] == 0 or second.shape[0] == 0:
        return zeros(0, first.shape[1])
    stacked = np.concatenate([first, second], axis=0)
    relations = left_null_space(stacked)
    if relations.shape[0] == 0:
        return zeros(0, first.shape[1])
    common = matmul(relations[:, : first.shape[0]], first)
    return row_reduce(common)[0]


def same_row_space(first: np.ndarray, second: np.ndarray) -> bool:
    first_rank = rank(first)
    if first_rank != rank(second):
        return False
    return rank(np.concatenate([first, second], axis=0)) == first_rank


def to_hex_rows(matrix: np.ndarray) -> List[str]:
    return ["".join(f"{x:x}" for x in row) for row in matrix.tolist()]
