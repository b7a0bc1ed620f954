# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
Sparse bigraded commutative polynomials over GF(16).

Every generator carries a bidegree (p, q), a torus weight modulo 15 and the name of
its Frobenius image. Names follow one convention: a letter, the weight subscript and
an optional "_k" power suffix, so that the weight is subscript * k modulo 15. For
example "u5_4" is the fourth power of u5 promoted to a generator, of weight 5.

Elements print and parse in the form "a4^2*b7 + z^3*a1*d13", where z is the
primitive element of GF(16).
"""

import re
from dataclasses import dataclass
from functools import reduce
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from esscert.scalars import (
    MUL_LIST,
    SQUARE_LIST,
    Scalar16,
    inverse,
)
from esscert.util import DomainException

WEIGHT_MODULUS = 15
# weight_of(0): the zero element has every weight.
ALL_WEIGHTS = -1

Bidegree = Tuple[int, int]
Monomial = Tuple[int, ...]
Terms = Dict[Monomial, int]

_NAME_PATTERN = re.compile(r"^(?P<letter>[a-y])(?P<subscript>\d+)(?:_(?P<power>\d+))?$")


@dataclass(frozen=True)
class Generator:
    name: str
    bidegree: Bidegree
    weight: int
    successor: str


def add_bidegrees(first: Bidegree, second: Bidegree) -> Bidegree:
    return first[0] + second[0], first[1] + second[1]


def sub_bidegrees(first: Bidegree, second: Bidegree) -> Bidegree:
    return first[0] - second[0], first[1] - second[1]


def monomial_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """
    Graded lexicographic key, larger keys come first in every listing.
    """
    return sum(monomial), monomial


class GeneratorTable:
    def __init__(self, name: str, generators: Sequence[Generator]) -> None:
        self.name = name
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.names: Tuple[str, ...] = tuple(x.name for x in self.generators)
        self.index: Dict[str, int] = {}
        for position, generator in enumerate(self.generators):
            if generator.name in self.index:
                raise DomainException(f"[{name}] duplicated generator {generator.name}")
            if generator.bidegree == (0, 0) or min(generator.bidegree) < 0:
                raise DomainException(
                    f"[{name}] invalid bidegree of {generator.name}: "
                    f"{generator.bidegree}"
                )
            self.index[generator.name] = position
        self.size = len(self.generators)
        self.bidegrees: Tuple[Bidegree, ...] = tuple(x.bidegree for x in generators)
        self.weights: Tuple[int, ...] = tuple(
            x.weight % WEIGHT_MODULUS for x in generators
        )
        try:
            self.successors: Tuple[int, ...] = tuple(
                self.index[x.successor] for x in self.generators
            )
        except KeyError as identifier:
            raise DomainException(f"[{name}] unknown successor {identifier}")
        self._validate()

    def _validate(self) -> None:
        if sorted(self.successors) != list(range(self.size)):
            raise DomainException(f"[{self.name}] successors are not a permutation")
        for position, generator in enumerate(self.generators):
            current = position
            for length in range(1, 5):
                current = self.successors[current]
                if current == position:
                    break
            if current != position or 4 % length:
                raise DomainException(
                    f"[{self.name}] the orbit length of {generator.name} doesn't "
                    "divide 4"
                )
            successor = self.successors[position]
            if self.weights[successor] != (2 * self.weights[position]) % WEIGHT_MODULUS:
                raise DomainException(
                    f"[{self.name}] weight of F({generator.name}) is not twice its "
                    "weight"
                )
            if self.bidegrees[successor] != self.bidegrees[position]:
                raise DomainException(
                    f"[{self.name}] F doesn't preserve the bidegree of "
                    f"{generator.name}"
                )
            expected = naming_weight(generator.name)
            if expected != self.weights[position]:
                raise DomainException(
                    f"[{self.name}] {generator.name} has weight "
                    f"{self.weights[position]}, but its name implies {expected}"
                )

    def __repr__(self) -> str:
        return f"GeneratorTable({self.name})"

    def monomial_bidegree(self, monomial: Monomial) -> Bidegree:
        p = q = 0
        for exponent, (gp, gq) in zip(monomial, self.bidegrees):
            p += exponent * gp
            q += exponent * gq
        return p, q

    def monomial_weight(self, monomial: Monomial) -> int:
        return (
            sum(exponent * weight for exponent, weight in zip(monomial, self.weights))
            % WEIGHT_MODULUS
        )

    def monomial_text(self, monomial: Monomial) -> str:
        factors = []
        for exponent, name in zip(monomial, self.names):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors) if factors else "1"

    def unit_monomial(self) -> Monomial:
        return (0,) * self.size

    def generator(self, name: str) -> "Element":
        if name not in self.index:
            raise DomainException(f"[{self.name}] unknown generator '{name}'")
        exponents = [0] * self.size
        exponents[self.index[name]] = 1
        return Element(self, {tuple(exponents): 1})

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial(): 1})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, value: Union[Scalar16, int]) -> "Element":
        bits = int(value)
        return Element(self, {self.unit_monomial(): bits} if bits else {})

    def parse(self, text: str) -> "Element":
        return _Parser(self, text).parse()


def naming_weight(name: str) -> int:
    matched = _NAME_PATTERN.match(name)
    if not matched:
        raise DomainException(f"generator name '{name}' doesn't follow the convention")
    power = int(matched.group("power") or 1)
    return (int(matched.group("subscript")) * power) % WEIGHT_MODULUS


def build_table(
    name: str, rows: Iterable[Tuple[str, Bidegree, str]]
) -> GeneratorTable:
    """
    rows are (name, bidegree, successor name), the weight comes from the name.
    """
    return GeneratorTable(
        name,
        [
            Generator(name=x, bidegree=bidegree, weight=naming_weight(x), successor=y)
            for x, bidegree, y in rows
        ],
    )


class Element:
    """
    An immutable sparse polynomial. Coefficients are scalar bit patterns and no zero
    coefficient is stored, so equal elements have equal storage.
    """

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: GeneratorTable, terms: Mapping[Monomial, int]) -> None:
        self.table = table
        self._terms: Terms = {k: v for k, v in terms.items() if v}
        self._hash: Optional[int] = None

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar16]]:
        return [
            (monomial, Scalar16(self._terms[monomial]))
            for monomial in sorted(self._terms, key=monomial_key, reverse=True)
        ]

    def monomials(self) -> List[Monomial]:
        return sorted(self._terms, key=monomial_key, reverse=True)

    def coefficient(self, monomial: Monomial) -> Scalar16:
        return Scalar16(self._terms.get(monomial, 0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check_table(self, other: "Element") -> None:
        if other.table is not self.table:
            raise DomainException(
                f"mismatched generator tables: {self.table.name} and "
                f"{other.table.name}"
            )

    def _coerce(self, other: Union["Element", Scalar16, int]) -> "Element":
        if isinstance(other, Element):
            self._check_table(other)
            return other
        return self.table.scalar(other)

    def __add__(self, other: Union["Element", Scalar16, int]) -> "Element":
        other = self._coerce(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, 0) ^ coefficient
        return Element(self.table, terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "Element":
        return self

    def __mul__(self, other: Union["Element", Scalar16, int]) -> "Element":
        if not isinstance(other, Element):
            bits = int(other)
            return Element(
                self.table,
                {k: MUL_LIST[v][bits] for k, v in self._terms.items()},
            )
        self._check_table(other)
        terms: Terms = {}
        for left, left_coefficient in self._terms.items():
            row = MUL_LIST[left_coefficient]
            for right, right_coefficient in other._terms.items():
                monomial = tuple(x + y for x, y in zip(left, right))
                terms[monomial] = terms.get(monomial, 0) ^ row[right_coefficient]
        return Element(self.table, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Element":
        if exponent < 0:
            constant = self._terms.get(self.table.unit_monomial(), 0)
            if len(self._terms) != 1 or not constant:
                raise DomainException(f"'{self}' is not invertible")
            return self.table.scalar(inverse(Scalar16(constant)) ** (-exponent))
        result = self.table.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.table is other.table and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table.name, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"Element({self.table.name}: {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial, coefficient in self.sorted_terms():
            monomial_text = self.table.monomial_text(monomial)
            if coefficient.bits == 1:
                parts.append(monomial_text)
            elif monomial_text == "1":
                parts.append(coefficient.to_power())
            else:
                parts.append(f"{coefficient.to_power()}*{monomial_text}")
        return " + ".join(parts)

    def bidegrees(self) -> List[Bidegree]:
        return sorted({self.table.monomial_bidegree(x) for x in self._terms})

    def scale(self, value: Union[Scalar16, int]) -> "Element":
        return self * value


def multiply(x: Element, y: Element) -> Element:
    return x * y


def frobenius_map(x: Element) -> Element:
    """
    Squares every coefficient and moves every exponent to the successor generator.
    """
    successors = x.table.successors
    terms: Terms = {}
    for monomial, coefficient in x.terms.items():
        image = [0] * len(monomial)
        for position, exponent in enumerate(monomial):
            image[successors[position]] = exponent
        terms[tuple(image)] = SQUARE_LIST[coefficient]
    return Element(x.table, terms)


def frobenius_power(x: Element, times: int) -> Element:
    for _ in range(times % 4):
        x = frobenius_map(x)
    return x


def norm_N(x: Element) -> Element:
    """
    x + F(x) + F^2(x) + F^3(x)
    """
    total = x
    current = x
    for _ in range(3):
        current = frobenius_map(current)
        total = total + current
    return total


def is_frobenius_stable(x: Element) -> bool:
    return frobenius_map(x) == x


def weight_of(x: Element) -> Optional[int]:
    """
    The common weight of all terms, ALL_WEIGHTS for zero, or None if the terms
    disagree.
    """
    if x.is_zero:
        return ALL_WEIGHTS
    weights = {x.table.monomial_weight(monomial) for monomial in x.terms}
    if len(weights) > 1:
        return None
    return weights.pop()


def bidegree_of(x: Element) -> Optional[Bidegree]:
    """
    The bidegree of a bihomogeneous element, None for zero or inhomogeneous input.
    """
    bidegrees = x.bidegrees()
    if len(bidegrees) != 1:
        return None
    return bidegrees[0]


def is_homogeneous(x: Element, bidegree: Bidegree) -> bool:
    return all(x.table.monomial_bidegree(monomial) == bidegree for monomial in x.terms)


def substitute(
    x: Element, target: GeneratorTable, images: Mapping[str, Element]
) -> Element:
    """
    The ring homomorphism sending every generator to its image in the target table.
    Generators without image go to the generator of the same name in the target.
    """
    generator_images: List[Element] = []
    for name in x.table.names:
        if name in images:
            image = images[name]
            if image.table is not target:
                raise DomainException(f"image of {name} is not in {target.name}")
            generator_images.append(image)
        else:
            generator_images.append(target.generator(name))

    power_cache: Dict[Tuple[int, int], Element] = {}

    def _power(position: int, exponent: int) -> Element:
        key = (position, exponent)
        if key not in power_cache:
            power_cache[key] = generator_images[position] ** exponent
        return power_cache[key]

    result = target.zero()
    for monomial, coefficient in x.terms.items():
        product = target.scalar(coefficient)
        for position, exponent in enumerate(monomial):
            if exponent:
                product = product * _power(position, exponent)
        result = result + product
    return result


def sum_elements(elements: Iterable[Element], table: GeneratorTable) -> Element:
    return reduce(lambda x, y: x + y, elements, table.zero())


_TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<name>[a-y]\d+(?:_\d+)?)|(?P<zeta>z)|(?P<number>\d+)|(?P<op>[-+*^()]))"
)


class _Parser:
    """
    Recursive descent over: expr = term (+ term)*, term = factor (* factor)*,
    factor = atom (^ integer)?, atom = generator | z | integer | ( expr ).
    """

    def __init__(self, table: GeneratorTable, text: str) -> None:
        self._table = table
        self._text = text
        self._tokens = self._tokenize(text)
        self._position = 0

    def _tokenize(self, text: str) -> List[Tuple[str, str]]:
        tokens: List[Tuple[str, str]] = []
        position = 0
        stripped = text.rstrip()
        while position < len(stripped):
            matched = _TOKEN_PATTERN.match(stripped, position)
            if not matched or matched.end() == position:
                raise DomainException(
                    f"cannot parse '{text}' at position {position}: "
                    f"'{stripped[position:]}'"
                )
            kind = matched.lastgroup
            assert kind
            tokens.append((kind, matched.group(kind)))
            position = matched.end()
        return tokens

    def _peek(self) -> Optional[Tuple[str, str]]:
        if self._position < len(self._tokens):
            return self._tokens[self._position]
        return None

    def _take(self) -> Tuple[str, str]:
        token = self._peek()
        if token is None:
            raise DomainException(f"unexpected end of '{self._text}'")
        self._position += 1
        return token

    def _expect(self, value: str) -> None:
        token = self._take()
        if token != ("op", value):
            raise DomainException(f"expected '{value}' in '{self._text}', got {token}")

    def parse(self) -> Element:
        if not self._tokens:
            raise DomainException("cannot parse an empty expression")
        result = self._expression()
        if self._peek() is not None:
            raise DomainException(
                f"unexpected '{self._peek()[1]}' in '{self._text}'"  # type: ignore
            )
        return result

    def _expression(self) -> Element:
        result = self._term()
        while self._peek() in (("op", "+"), ("op", "-")):
            self._take()
            result = result + self._term()
        return result

    def _term(self) -> Element:
        result = self._factor()
        while self._peek() == ("op", "*"):
            self._take()
            result = result * self._factor()
        return result

    def _factor(self) -> Element:
        base = self._atom()
        if self._peek() == ("op", "^"):
            self._take()
            negative = False
            if self._peek() == ("op", "-"):
                self._take()
                negative = True
            kind, value = self._take()
            if kind != "number":
                raise DomainException(f"expected an exponent in '{self._text}'")
            exponent = -int(value) if negative else int(value)
            return base**exponent
        return base

    def _atom(self) -> Element:
        kind, value = self._take()
        if kind == "name":
            return self._table.generator(value)
        if kind == "zeta":
            return self._table.scalar(Scalar16.zeta_power(1))
        if kind == "number":
            # integers are read in the prime field
            return self._table.scalar(int(value) % 2)
        if value == "(":
            result = self._expression()
            self._expect(")")
            return result
        raise DomainException(f"unexpected '{value}' in '{self._text}'")

