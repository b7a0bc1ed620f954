# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
The 64 element group of upper unitriangular matrices

    1  a  b
    0  1  a^4
    0  0  1

over GF(16) with b + b^4 = a^5, and the diagonal torus element T that normalizes
it.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Set, Tuple

import numpy as np

from esscert import linalg
from esscert.report import Section
from esscert.scalars import (
    ONE,
    ZERO,
    ZETA,
    Scalar16,
    all_scalars,
    frobenius,
    nonzero_scalars,
    trace2,
    verify_artin_schreier_product,
    verify_trace_factorization,
)
from esscert.util import DomainException

TORUS_ORDER = 15
# exponents of z on the diagonal of T
TORUS_DIAGONAL = (-1, -3, 4)


@dataclass(frozen=True, order=True)
class GroupElement:
    a: Scalar16
    b: Scalar16

    def __post_init__(self) -> None:
        if not is_member(self.a, self.b):
            raise DomainException(f"({self.a}, {self.b}) is not in the group")

    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [1, self.a.bits, self.b.bits],
                [0, 1, (self.a**4).bits],
                [0, 0, 1],
            ],
            dtype=np.uint8,
        )

    @property
    def is_identity(self) -> bool:
        return not self.a and not self.b

    def __str__(self) -> str:
        return f"({self.a.to_hex()},{self.b.to_hex()})"


@dataclass(frozen=True)
class TorusPower:
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % TORUS_ORDER)

    def matrix(self) -> np.ndarray:
        return diagonal_matrix(
            [Scalar16.zeta_power(x * self.k) for x in TORUS_DIAGONAL]
        )

    def inverse_matrix(self) -> np.ndarray:
        return diagonal_matrix(
            [Scalar16.zeta_power(-x * self.k) for x in TORUS_DIAGONAL]
        )


@dataclass
class QuotientStructure:
    order: int
    coset_size: int
    squares_central: bool
    rank: int

    @property
    def is_elementary_abelian(self) -> bool:
        return self.squares_central and 2**self.rank == self.order


def is_member(a: Scalar16, b: Scalar16) -> bool:
    return b + b**4 == a**5


def diagonal_matrix(entries: Iterable[Scalar16]) -> np.ndarray:
    values = [x.bits for x in entries]
    matrix = linalg.zeros(len(values), len(values))
    for index, value in enumerate(values):
        matrix[index, index] = value
    return matrix


def determinant3(matrix: np.ndarray) -> Scalar16:
    m = [[Scalar16(int(x)) for x in row] for row in matrix]
    return (
        m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1])
        + m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0])
    )


def from_matrix(matrix: np.ndarray) -> GroupElement:
    expected = np.array(matrix, dtype=np.uint8)
    element = GroupElement(Scalar16(int(expected[0, 1])), Scalar16(int(expected[0, 2])))
    if not np.array_equal(element.matrix(), expected):
        raise DomainException(f"matrix is not in the group: {expected.tolist()}")
    return element


@lru_cache(maxsize=None)
def enumerate_group() -> Tuple[GroupElement, ...]:
    return tuple(
        GroupElement(a, b)
        for a in all_scalars()
        for b in all_scalars()
        if is_member(a, b)
    )


IDENTITY = GroupElement(ZERO, ZERO)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    for item in (g, h):
        if not is_member(item.a, item.b):
            raise DomainException(f"{item} is not in the group")
    return GroupElement(g.a + h.a, g.b + h.b + g.a * h.a**4)


def group_inverse(g: GroupElement) -> GroupElement:
    return GroupElement(g.a, g.b + g.a**5)


def power(g: GroupElement, exponent: int) -> GroupElement:
    result = IDENTITY
    for _ in range(exponent):
        result = compose(result, g)
    return result


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    return compose(compose(group_inverse(g), group_inverse(h)), compose(g, h))


def center() -> List[GroupElement]:
    elements = enumerate_group()
    return [
        g for g in elements if all(compose(g, h) == compose(h, g) for h in elements)
    ]


def element_order(g: GroupElement) -> int:
    current = g
    order = 1
    while not current.is_identity:
        current = compose(current, g)
        order += 1
    return order


def quotient_structure() -> QuotientStructure:
    central = set(center())
    cosets: Set[Scalar16] = set()
    coset_sizes: Set[int] = set()
    for a in all_scalars():
        members = [g for g in enumerate_group() if g.a == a]
        if members:
            cosets.add(a)
            coset_sizes.add(len(members))
    squares_central = all(compose(g, g) in central for g in enumerate_group())
    # G/Z is identified with the additive group of the a entries.
    bits = np.array(
        [[(a.bits >> i) & 1 for i in range(4)] for a in sorted(cosets)],
        dtype=np.uint8,
    )
    return QuotientStructure(
        order=len(cosets),
        coset_size=coset_sizes.pop() if len(coset_sizes) == 1 else -1,
        squares_central=squares_central,
        rank=linalg.rank(bits),
    )


def torus_conjugate(g: GroupElement, k: TorusPower) -> GroupElement:
    """
    T^k g T^-k by the closed form (z^2k a, z^10k b), cross checked against the
    matrix product.
    """
    closed = GroupElement(
        Scalar16.zeta_power(2 * k.k) * g.a, Scalar16.zeta_power(10 * k.k) * g.b
    )
    literal = linalg.matmul(linalg.matmul(k.matrix(), g.matrix()), k.inverse_matrix())
    if not np.array_equal(literal, closed.matrix()):
        raise DomainException(f"torus conjugation mismatch at {g}, k={k.k}")
    return closed


def torus_determinant() -> Scalar16:
    return determinant3(TorusPower(1).matrix())


def torus_order() -> int:
    identity = diagonal_matrix([ONE, ONE, ONE])
    generator = TorusPower(1).matrix()
    current = generator
    for k in range(1, TORUS_ORDER + 1):
        if np.array_equal(current, identity):
            return k
        current = linalg.matmul(current, generator)
    return -1


def f2_matrix(multiplier: Scalar16, basis: List[Scalar16]) -> np.ndarray:
    """
    Matrix (acting on row vectors) of x -> multiplier * x on the F2-span of basis.
    """
    size = len(basis)
    rows = []
    for item in basis:
        image = multiplier * item
        for mask in range(2**size):
            combination = ZERO
            for index in range(size):
                if mask >> index & 1:
                    combination = combination + basis[index]
            if combination == image:
                rows.append([mask >> index & 1 for index in range(size)])
                break
        else:
            raise DomainException(f"{image} is not in the span of {basis}")
    return np.array(rows, dtype=np.uint8)


def eigenvalues(matrix: np.ndarray) -> Set[Scalar16]:
    size = matrix.shape[0]
    found: Set[Scalar16] = set()
    for value in nonzero_scalars():
        shifted = matrix ^ diagonal_matrix([value] * size)
        if linalg.rank(shifted) < size:
            found.add(value)
    return found


def torus_eigenvalues() -> Tuple[Set[Scalar16], Set[Scalar16]]:
    """
    Eigenvalues of T on G/Z(G), where it multiplies a by z^2, and on Z(G), where it
    multiplies b by z^10. The action itself is used, not its dual; both conventions
    give the same sets because each set is a Frobenius orbit.
    """
    quotient_basis = [Scalar16.zeta_power(x) for x in range(4)]
    center_basis = [ONE, Scalar16.zeta_power(5)]
    return (
        eigenvalues(f2_matrix(Scalar16.zeta_power(2), quotient_basis)),
        eigenvalues(f2_matrix(Scalar16.zeta_power(10), center_basis)),
    )


def is_frobenius_closed(values: Set[Scalar16]) -> bool:
    return {frobenius(x) for x in values} == values


def check_associativity(samples: int, seed: int) -> List[Tuple[GroupElement, ...]]:
    elements = enumerate_group()
    randomizer = random.Random(seed)
    failures: List[Tuple[GroupElement, ...]] = []
    for _ in range(samples):
        g, h, k = (randomizer.choice(elements) for _ in range(3))
        if compose(compose(g, h), k) != compose(g, compose(h, k)):
            failures.append((g, h, k))
    return failures


def check_matrix_law() -> List[Tuple[GroupElement, GroupElement]]:
    failures = []
    for g in enumerate_group():
        for h in enumerate_group():
            product = linalg.matmul(g.matrix(), h.matrix())
            if not np.array_equal(product, compose(g, h).matrix()):
                failures.append((g, h))
    return failures


def check_closure() -> bool:
    members = set(enumerate_group())
    return all(compose(g, h) in members for g in members for h in members)


def check_inverses() -> bool:
    return all(
        compose(g, group_inverse(g)) == IDENTITY
        and compose(group_inverse(g), g) == IDENTITY
        for g in enumerate_group()
    )


def check_torus_automorphism() -> bool:
    # T generates the torus, so its powers are automorphisms as well.
    generator = TorusPower(1)
    elements = enumerate_group()
    return all(
        torus_conjugate(compose(g, h), generator)
        == compose(torus_conjugate(g, generator), torus_conjugate(h, generator))
        for g in elements
        for h in elements
    )


def check_commutators_central() -> bool:
    central = set(center())
    elements = enumerate_group()
    return all(commutator(g, h) in central for g in elements for h in elements)


def _scalar_set(values: Set[Scalar16]) -> List[str]:
    return [str(x) for x in sorted(values, key=lambda x: x.log)]


def verify_group(samples: int = 10000, seed: int = 0) -> Section:
    """
    The group structure report: order, center, exponents, the quotient by the
    center and the torus action.
    """
    section = Section("group")
    elements = enumerate_group()
    section.check("order", len(elements) == 64, f"|G| = {len(elements)}")
    section.check("closure", check_closure(), "G is closed under composition")
    section.check("inverses", check_inverses(), "(a, b)^-1 = (a, b + a^5)")
    wrong_pairs = check_matrix_law()
    section.check(
        "matrix_law",
        not wrong_pairs,
        "composition agrees with 3x3 matrix multiplication on all pairs",
        [[str(g), str(h)] for g, h in wrong_pairs[:10]] or None,
    )
    wrong_triples = check_associativity(samples, seed)
    section.check(
        "associativity",
        not wrong_triples,
        f"associativity holds on {samples} random triples",
        [[str(x) for x in triple] for triple in wrong_triples[:10]] or None,
    )

    central = center()
    section.check(
        "center.size",
        len(central) == 4,
        f"|Z(G)| = {len(central)}",
        [str(x) for x in central],
    )
    section.check(
        "center.exponent",
        all(element_order(x) <= 2 for x in central),
        "Z(G) has exponent 2",
    )
    quotient = quotient_structure()
    section.check(
        "quotient",
        quotient.order == 16 and quotient.is_elementary_abelian and quotient.rank == 4,
        f"G/Z(G) has order {quotient.order} and rank {quotient.rank}",
    )
    orders = {element_order(g) for g in elements if g not in central}
    section.check(
        "noncentral_order",
        orders == {4},
        "every noncentral element has order 4",
        sorted(orders),
    )
    section.check(
        "commutators_central",
        check_commutators_central(),
        "[G, G] lies in Z(G)",
    )

    order = torus_order()
    section.check("torus.order", order == TORUS_ORDER, f"T has order {order}")
    determinant = torus_determinant()
    section.check("torus.determinant", determinant == ONE, f"det T = {determinant}")
    section.check(
        "torus.automorphism",
        check_torus_automorphism(),
        "conjugation by T is an automorphism of G",
    )
    on_quotient, on_center = torus_eigenvalues()
    expected_quotient = {Scalar16.zeta_power(x) for x in [1, 2, 4, 8]}
    expected_center = {Scalar16.zeta_power(x) for x in [5, 10]}
    section.check(
        "torus.eigenvalues.quotient",
        on_quotient == expected_quotient and is_frobenius_closed(on_quotient),
        f"eigenvalues on G/Z(G): {_scalar_set(on_quotient)}",
    )
    section.check(
        "torus.eigenvalues.center",
        on_center == expected_center and is_frobenius_closed(on_center),
        f"eigenvalues on Z(G): {_scalar_set(on_center)}",
    )
    section.info(
        "torus.eigenvalues.convention",
        "eigenvalues of the action on G/Z(G) and Z(G), the dual action gives the "
        "same Frobenius orbits",
    )

    section.check(
        "field.trace_factorization",
        verify_trace_factorization(),
        "(X^8+X^4+X^2+X)(X^8+X^4+X^2+X+1) = X^16+X over F2",
    )
    section.check(
        "field.artin_schreier",
        verify_artin_schreier_product(),
        "the product of X^2+X+a over trace zero a is X^16+X",
    )
    section.check("field.trace_zeta", trace2(ZETA) == 1, "trace(z) = 1")
    return section
