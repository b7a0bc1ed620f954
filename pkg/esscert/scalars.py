# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
GF(16) with the modulus X^4 + X^3 + 1.

A scalar is stored as 4 bits: bit i is the coefficient of z^i, where z is the class
of X. The layout is the same as the integer representation used by galois, which
builds the multiplication table. All other tables are derived from it.
"""

import re
from functools import total_ordering
from typing import Any, Iterable, List, Optional, Set, Union

import galois  # type: ignore
import numpy as np

from esscert.util import DomainException

MODULUS = "x^4 + x^3 + 1"
ORDER = 16

GF16 = galois.GF(2**4, irreducible_poly=MODULUS)

MUL: np.ndarray = (
    (GF16.elements[:, np.newaxis] * GF16.elements[np.newaxis, :])
    .view(np.ndarray)
    .astype(np.uint8)
)
# nested lists are faster than numpy for single lookups in element arithmetic.
MUL_LIST: List[List[int]] = MUL.tolist()
SQUARE_LIST: List[int] = [MUL_LIST[x][x] for x in range(ORDER)]

_ZETA_BITS = 0b0010


def _build_exp_table() -> List[int]:
    table = [1]
    for _ in range(ORDER - 2):
        table.append(MUL_LIST[table[-1]][_ZETA_BITS])
    if MUL_LIST[table[-1]][_ZETA_BITS] != 1 or len(set(table)) != ORDER - 1:
        raise DomainException(f"z is not primitive for the modulus {MODULUS}")
    return table


EXP_LIST: List[int] = _build_exp_table()
LOG_LIST: List[int] = [-1] * ORDER
for _exponent, _bits in enumerate(EXP_LIST):
    LOG_LIST[_bits] = _exponent

INV_LIST: List[int] = [0] + [
    EXP_LIST[(-LOG_LIST[x]) % (ORDER - 1)] for x in range(1, ORDER)
]
INV: np.ndarray = np.array(INV_LIST, dtype=np.uint8)

_SCALAR_PATTERN = re.compile(
    r"^\s*(?:z(?:\^(?P<power>-?\d+))?|(?P<hex>[0-9a-fA-F]))\s*$"
)

ScalarLike = Union["Scalar16", int]


@total_ordering
class Scalar16:
    """
    An immutable element of GF(16). Ordering follows the bit pattern, so sorted
    collections of scalars are reproducible.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0) -> None:
        if not 0 <= bits < ORDER:
            raise DomainException(f"scalar bits out of range: {bits}")
        self._bits = bits

    @classmethod
    def zeta_power(cls, exponent: int) -> "Scalar16":
        return cls(EXP_LIST[exponent % (ORDER - 1)])

    @classmethod
    def parse(cls, text: str) -> "Scalar16":
        """
        Accepts a hex digit of the bit pattern ("0".."f") or a power of z ("z",
        "z^7", "z^-1").
        """
        matched = _SCALAR_PATTERN.match(text)
        if not matched:
            raise DomainException(f"cannot parse scalar '{text}'")
        if matched.group("hex") is not None:
            return cls(int(matched.group("hex"), 16))
        power = matched.group("power")
        return cls.zeta_power(int(power) if power is not None else 1)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def log(self) -> int:
        """
        The discrete logarithm to the base z.
        """
        if not self._bits:
            raise DomainException("zero has no logarithm")
        return LOG_LIST[self._bits]

    def to_hex(self) -> str:
        return f"{self._bits:x}"

    def to_power(self) -> str:
        if self._bits == 0:
            return "0"
        exponent = LOG_LIST[self._bits]
        if exponent == 0:
            return "1"
        if exponent == 1:
            return "z"
        return f"z^{exponent}"

    def __add__(self, other: ScalarLike) -> "Scalar16":
        return Scalar16(self._bits ^ _bits_of(other))

    __radd__ = __add__
    # characteristic 2
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "Scalar16":
        return self

    def __mul__(self, other: ScalarLike) -> "Scalar16":
        return Scalar16(MUL_LIST[self._bits][_bits_of(other)])

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar16":
        return self * inverse(Scalar16(_bits_of(other)))

    def __pow__(self, exponent: int) -> "Scalar16":
        if self._bits == 0:
            if exponent < 0:
                raise DomainException("zero has no inverse")
            return Scalar16(1 if exponent == 0 else 0)
        return Scalar16.zeta_power(LOG_LIST[self._bits] * exponent)

    def __bool__(self) -> bool:
        return self._bits != 0

    def __int__(self) -> int:
        return self._bits

    def __index__(self) -> int:
        return self._bits

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Scalar16):
            return self._bits == other._bits
        if isinstance(other, int):
            return self._bits == other
        return NotImplemented

    def __lt__(self, other: "Scalar16") -> bool:
        return self._bits < other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def __repr__(self) -> str:
        return f"Scalar16({self.to_power()})"

    def __str__(self) -> str:
        return self.to_power()


def _bits_of(value: ScalarLike) -> int:
    if isinstance(value, Scalar16):
        return value.bits
    if isinstance(value, (int, np.integer)):
        if not 0 <= int(value) < ORDER:
            raise DomainException(f"scalar bits out of range: {value}")
        return int(value)
    raise DomainException(f"not a scalar: {value!r}")


ZERO = Scalar16(0)
ONE = Scalar16(1)
ZETA = Scalar16(_ZETA_BITS)
# a primitive cube root of unity, it generates F4 inside GF(16).
OMEGA = Scalar16.zeta_power(5)


def all_scalars() -> List[Scalar16]:
    return [Scalar16(bits) for bits in range(ORDER)]


def nonzero_scalars() -> List[Scalar16]:
    return [Scalar16(bits) for bits in range(1, ORDER)]


def f4_units() -> List[Scalar16]:
    return [ONE, OMEGA, OMEGA * OMEGA]


def mul(a: Scalar16, b: Scalar16) -> Scalar16:
    return a * b


def inverse(a: Scalar16) -> Scalar16:
    if not a:
        raise DomainException("zero has no inverse")
    return Scalar16(INV_LIST[a.bits])


def frobenius(a: Scalar16) -> Scalar16:
    return Scalar16(SQUARE_LIST[a.bits])


def trace2(a: Scalar16) -> int:
    """
    a + a^2 + a^4 + a^8, which lies in F2.
    """
    total = a
    current = a
    for _ in range(3):
        current = frobenius(current)
        total = total + current
    if total.bits not in (0, 1):
        raise DomainException(f"trace of {a} is not in F2: {total}")
    return total.bits


def evaluate(poly: Iterable[ScalarLike], point: Scalar16) -> Scalar16:
    """
    Horner evaluation, coefficients are listed from the constant term up.
    """
    result = ZERO
    for coefficient in reversed(list(poly)):
        result = result * point + Scalar16(_bits_of(coefficient))
    return result


def roots(poly: Iterable[ScalarLike]) -> Set[Scalar16]:
    coefficients = [Scalar16(_bits_of(x)) for x in poly]
    if not any(coefficients):
        raise DomainException("the zero polynomial has no finite root set")
    return {x for x in all_scalars() if not evaluate(coefficients, x)}


def solve_artin_schreier(value: Scalar16) -> Optional[Scalar16]:
    """
    Returns the smaller (by bit pattern) solution mu of mu^2 + mu = value, or None
    if the trace of value is 1.
    """
    for candidate in all_scalars():
        if frobenius(candidate) + candidate == value:
            return candidate
    return None


def degrees_poly(degrees: Iterable[int]) -> List[Scalar16]:
    """
    Builds the coefficient list of a sum of monomials X^d with coefficient 1.
    """
    degrees = list(degrees)
    coefficients = [ZERO] * (max(degrees) + 1)
    for degree in degrees:
        coefficients[degree] = coefficients[degree] + ONE
    return coefficients


def trace_zero_units() -> List[Scalar16]:
    """
    The 7 nonzero roots of X^8 + X^4 + X^2 + X, that are the roots of
    X^7 + X^3 + X + 1.
    """
    return sorted(roots(degrees_poly([7, 3, 1, 0])))


def verify_trace_factorization() -> bool:
    """
    (X^8+X^4+X^2+X)(X^8+X^4+X^2+X+1) = X^16+X over F2.
    """
    gf2 = galois.GF(2)
    trace_poly = galois.Poly.Degrees([8, 4, 2, 1], field=gf2)
    return bool(
        trace_poly * (trace_poly + galois.Poly.One(field=gf2))
        == galois.Poly.Degrees([16, 1], field=gf2)
    )


def verify_artin_schreier_product() -> bool:
    """
    The product of X^2 + X + a over the trace zero elements a is X^16 + X, so
    every trace zero element is of the form mu^2 + mu.
    """
    product = galois.Poly.One(field=GF16)
    for value in all_scalars():
        if trace2(value) == 0:
            product *= galois.Poly([1, 1, value.bits], field=GF16)
    return bool(product == galois.Poly.Degrees([16, 1], field=GF16))
