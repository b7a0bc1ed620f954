# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
The Poincare series of the cohomology ring, its functional equation, the parameter
system defined over F2 and the comparison with the earlier published listing.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
from dataclasses_json import dataclass_json

from esscert import definitions, linalg
from esscert.bigraded import Bidegree, Element, add_bidegrees, is_frobenius_stable
from esscert.report import Section
from esscert.sseq import SpectralPipeline, last_survivor
from esscert.util.logger import get_logger

_log = get_logger("series")

PAIRING_DEGREES = [0, 4, 6]


@dataclass_json()
@dataclass
class PoincareSeries:
    """
    numerator / prod (1 - t^d) over the denominator degrees.
    """

    numerator: List[int]
    denominator_degrees: List[int] = field(
        default_factory=lambda: list(definitions.POINCARE_DENOMINATOR_DEGREES)
    )

    @property
    def degree(self) -> int:
        return len(self.numerator) - 1

    def is_palindromic(self) -> bool:
        return self.numerator == self.numerator[::-1]

    def evaluate(self, t: Fraction) -> Fraction:
        value = sum(
            (Fraction(x) * t**i for i, x in enumerate(self.numerator)), Fraction(0)
        )
        for degree in self.denominator_degrees:
            value /= 1 - t**degree
        return value

    def to_text(self) -> str:
        terms = []
        for power, coefficient in enumerate(self.numerator):
            if not coefficient:
                continue
            if power == 0:
                terms.append(str(coefficient))
                continue
            variable = "t" if power == 1 else f"t^{power}"
            terms.append(variable if coefficient == 1 else f"{coefficient}{variable}")
        counts: Dict[int, int] = {}
        for degree in self.denominator_degrees:
            counts[degree] = counts.get(degree, 0) + 1
        denominator = "".join(
            f"(1 - t^{x})" + (f"^{y}" if y > 1 else "") for x, y in counts.items()
        )
        return f"({' + '.join(terms)})/{denominator}"


def numerator_from_dimensions(dimensions: Dict[Bidegree, int], top: int) -> List[int]:
    coefficients = [0] * (top + 1)
    for (p, q), dimension in dimensions.items():
        if p + q <= top:
            coefficients[p + q] += dimension
    return coefficients


def poincare_numerator(pipeline: SpectralPipeline) -> Tuple[List[int], Section]:
    """
    The coefficient of t^n is the dimension of the quotient of E-infinity by the
    parameters in total degree n.
    """
    section = Section("series.numerator")
    context = pipeline.einf_mod
    top = definitions.FORMAL_DIMENSION
    dimensions: Dict[Bidegree, int] = {}
    missing = []
    for p in range(top + 1):
        for q in range(top + 1 - p):
            bidegree = (p, q)
            if context.space.in_window(bidegree) and context.is_computable(bidegree):
                dimensions[bidegree] = context.dimension(bidegree)
            else:
                missing.append([p, q])
    numerator = numerator_from_dimensions(dimensions, top)
    expected = definitions.POINCARE_NUMERATOR
    wrong = [i for i, (x, y) in enumerate(zip(numerator, expected)) if x != y]
    section.check(
        "coefficients",
        not wrong,
        f"numerator {numerator}",
        {"degrees": wrong, "expected": expected} if wrong else None,
    )
    if missing:
        section.info(
            "not_computable",
            f"{len(missing)} bidegrees are outside of the window, E5 vanishes there",
            missing,
        )
    from_table = numerator_from_dimensions(definitions.EINF_QUOTIENT_DIMENSIONS, top)
    section.check(
        "table_columns",
        from_table == expected,
        "the numerator is the sum of the quotient dimensions along p + q = n",
    )
    section.check(
        "sum",
        sum(numerator) == sum(expected),
        f"the coefficients sum to {sum(numerator)}",
    )
    if sum(expected) != definitions.PUBLISHED_NUMERATOR_SUM:
        section.info(
            "published_sum",
            f"the coefficient sum is stated as {definitions.PUBLISHED_NUMERATOR_SUM}, "
            f"the listed coefficients sum to {sum(expected)}",
        )
    return numerator, section


def _degree_basis(
    pipeline: SpectralPipeline, degree: int
) -> List[Tuple[Bidegree, Element]]:
    context = pipeline.einf_mod
    result = []
    for p in range(degree + 1):
        bidegree = (p, degree - p)
        if not context.space.in_window(bidegree) or not context.is_computable(
            bidegree
        ):
            continue
        result.extend((bidegree, x) for x in context.class_basis(bidegree))
    return result


def pairing_rank(pipeline: SpectralPipeline, degree: int) -> Tuple[int, int]:
    """
    Rank of the cup product pairing of degree n with degree 14 - n into the class
    at the top bidegree, and the dimension in degree n.
    """
    context = pipeline.einf_mod
    top = definitions.LAST_SURVIVOR_BIDEGREE
    lower = _degree_basis(pipeline, degree)
    upper = _degree_basis(pipeline, definitions.FORMAL_DIMENSION - degree)
    matrix = np.zeros((len(lower), len(upper)), dtype=np.uint8)
    for i, (first_bidegree, first) in enumerate(lower):
        for j, (second_bidegree, second) in enumerate(upper):
            if add_bidegrees(first_bidegree, second_bidegree) != top:
                continue
            coords = context.class_coords(first * second, top, check_cycle=False)
            matrix[i, j] = coords[0]
    return linalg.rank(matrix), len(lower)


def check_functional_equation(
    pipeline: SpectralPipeline, numerator: List[int]
) -> Section:
    section = Section("series.duality")
    series = PoincareSeries(numerator)
    section.check(
        "palindromic",
        series.is_palindromic() and series.degree == definitions.FORMAL_DIMENSION,
        f"coefficient of t^n = coefficient of t^({series.degree} - n)",
    )
    wrong = []
    for t in [Fraction(2), Fraction(3), Fraction(1, 2)]:
        if series.evaluate(1 / t) != t**2 * series.evaluate(t):
            wrong.append(str(t))
    section.check(
        "functional_equation",
        not wrong,
        "P(1/t) = t^2 P(t)",
        wrong or None,
    )

    xi, _ = last_survivor(pipeline)
    section.check(
        "top_class",
        xi is not None and not xi.is_zero,
        "the quotient has a nonzero top class in degree "
        f"{definitions.FORMAL_DIMENSION}",
    )
    for degree in PAIRING_DEGREES:
        rank, dimension = pairing_rank(pipeline, degree)
        section.check(
            f"pairing.{degree}",
            rank == dimension and dimension > 0,
            f"the pairing of degree {degree} with degree "
            f"{definitions.FORMAL_DIMENSION - degree} has rank {rank} of {dimension}",
        )
    section.info(
        "poincare_duality",
        "the quotient satisfies Poincare duality in formal dimension "
        f"{definitions.FORMAL_DIMENSION}",
    )
    return section


def rational_parameters(pipeline: SpectralPipeline) -> Tuple[List[Element], Section]:
    """
    u5^8 + u10^8 and w u5^8 + w^2 u10^8 generate the same ideal as u5^8, u10^8 and
    are stable under F.
    """
    section = Section("series.parameters")
    parameters = pipeline.rational_parameters()
    for index, parameter in enumerate(parameters):
        section.check(
            f"frobenius_stable.{index}",
            is_frobenius_stable(parameter),
            f"F({parameter}) = {parameter}",
        )

    space = pipeline.e5_space
    standard = pipeline.parameters()
    wrong = []
    checked = 0
    for p, q in pipeline.bidegrees():
        if q < 8:
            continue
        bidegree = (p, q)
        lower = space.bidegree_basis((p, q - 8))
        dimension = space.dimension(bidegree)
        first = linalg.as_matrix(
            [space.coords(x * y, bidegree) for x in standard for y in lower], dimension
        )
        second = linalg.as_matrix(
            [space.coords(x * y, bidegree) for x in parameters for y in lower],
            dimension,
        )
        checked += 1
        if not linalg.same_row_space(first, second):
            wrong.append([p, q])
    section.check(
        "same_ideal",
        not wrong,
        f"the parameter ideals agree on {checked} bidegrees",
        wrong or None,
    )

    quotient = pipeline.einf_mod
    rational = pipeline.einf_rational
    different = [
        list(x)
        for x in pipeline.bidegrees()
        if quotient.is_computable(x)
        and rational.is_computable(x)
        and quotient.dimension(x) != rational.dimension(x)
    ]
    section.check(
        "same_quotient",
        not different,
        "the quotients by both parameter systems have the same dimensions",
        different or None,
    )
    return parameters, section


def clark_discrepancy_report(
    pipeline: SpectralPipeline, numerator: List[int]
) -> Section:
    section = Section("series.discrepancies")
    dimension = pipeline.einf.dimension((3, 4))
    section.check(
        "dimension.3-4",
        dimension == definitions.EINF_QUOTIENT_DIMENSIONS[(3, 4)],
        f"dim E-infinity(3, 4) = {dimension}, the earlier listing has "
        f"{definitions.CLARK_DIMENSION_34}",
        {"computed": dimension, "listed": definitions.CLARK_DIMENSION_34},
    )
    section.check(
        "numerator.t7",
        numerator[7] == definitions.POINCARE_NUMERATOR[7],
        f"coefficient of t^7 = {numerator[7]}, the earlier listing has "
        f"{definitions.CLARK_NUMERATOR_T7}",
        {"computed": numerator[7], "listed": definitions.CLARK_NUMERATOR_T7},
    )
    section.info(
        "relations",
        f"{len(definitions.EINF_RELATIONS_34)} relations at (3, 4) and "
        f"{len(definitions.EINF_RELATIONS_46)} relations at (4, 6) replace the "
        "earlier ones",
        {
            "3-4": definitions.EINF_RELATIONS_34,
            "4-6": definitions.EINF_RELATIONS_46,
        },
    )
    return section


def verify_series(pipeline: SpectralPipeline) -> Tuple[PoincareSeries, List[Section]]:
    numerator, numerator_section = poincare_numerator(pipeline)
    _log.debug(f"numerator: {numerator}")
    _, parameter_section = rational_parameters(pipeline)
    return PoincareSeries(numerator), [
        numerator_section,
        check_functional_equation(pipeline, numerator),
        parameter_section,
        clark_discrepancy_report(pipeline, numerator),
    ]
