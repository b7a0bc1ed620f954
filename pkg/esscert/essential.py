# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
Essential classes at the E-infinity level.

A class is E-infinity essential if it is divisible, inside of E-infinity, by each of
the 15 nonzero F-stable classes N(alpha a1) of degree (1, 0). Classes are tested
modulo the parameters u5^8, u10^8, where E-infinity is a finite dimensional algebra.
"""

import random
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

import galois  # type: ignore
import numpy as np
from dataclasses_json import dataclass_json

from esscert import definitions, linalg
from esscert.bigraded import (
    Bidegree,
    Element,
    add_bidegrees,
    bidegree_of,
    frobenius_map,
    norm_N,
)
from esscert.pages import SubquotientContext, divides, is_first_quadrant
from esscert.report import CheckStatus, Section
from esscert.scalars import (
    ONE,
    ZETA,
    Scalar16,
    f4_units,
    inverse,
    nonzero_scalars,
    solve_artin_schreier,
    trace_zero_units,
)
from esscert.sseq import SpectralPipeline, last_survivor
from esscert.util import DomainException, constants
from esscert.util.logger import get_logger
from esscert.util.parallel import run_in_parallel
from esscert.util.perf_timer import create_timer

_log = get_logger("essential")

# total degrees covered by the scan, the quotient vanishes above.
SCAN_DEGREE = definitions.FORMAL_DIMENSION
_BASES_KEY = "essential_bases"


@dataclass(frozen=True)
class RationalDegreeOneClass:
    alpha: Scalar16
    element: Element

    def __str__(self) -> str:
        return f"N({self.alpha}*a1)"


@dataclass_json()
@dataclass
class EssentialWitnessSet:
    """
    Division witnesses keyed by the divisor N(alpha a1), alpha written as a power of
    z. If some divisor fails, failed_divisor names the first one.
    """

    element: str
    bidegree: List[int]
    witnesses: Dict[str, str] = field(default_factory=dict)
    failed_divisor: Optional[str] = None

    @property
    def is_essential(self) -> bool:
        return self.failed_divisor is None


def degree_one_class(alpha: Scalar16) -> Element:
    """
    N(alpha a1) = alpha a1 + alpha^2 a2 + alpha^4 a4 + alpha^8 a8 in E5.
    """
    return norm_N(definitions.E5_TABLE.generator("a1") * alpha)


def h1_enumerate() -> List[RationalDegreeOneClass]:
    return [RationalDegreeOneClass(x, degree_one_class(x)) for x in nonzero_scalars()]


def check_h1() -> Section:
    section = Section("essential.h1")
    classes = h1_enumerate()
    distinct = {x.element for x in classes}
    section.check(
        "distinct",
        len(distinct) == 15,
        f"{len(distinct)} distinct classes N(alpha a1)",
    )
    section.check(
        "frobenius_stable",
        all(frobenius_map(x.element) == x.element for x in classes),
        "F(N(alpha a1)) = N(alpha a1)",
    )
    wrong = []
    for first in classes:
        for second in classes:
            if first.alpha == second.alpha:
                continue
            total = degree_one_class(first.alpha + second.alpha)
            if first.element + second.element != total:
                wrong.append([str(first.alpha), str(second.alpha)])
    section.check(
        "linear",
        not wrong,
        "N(alpha a1) + N(beta a1) = N((alpha + beta) a1)",
        wrong or None,
    )

    # bits of the coefficients of a1, a2, a4, a8
    gf2 = galois.GF(2)
    a_positions = [definitions.E5_TABLE.index[x] for x in definitions.A_NAMES]
    rows = []
    for item in classes:
        bits = []
        for position in a_positions:
            exponents = [0] * definitions.E5_TABLE.size
            exponents[position] = 1
            coefficient = item.element.coefficient(tuple(exponents)).bits
            bits.extend((coefficient >> i) & 1 for i in range(4))
        rows.append(bits)
    rank = int(np.linalg.matrix_rank(gf2(np.array(rows, dtype=np.uint8))))
    section.check(
        "f2_dimension", rank == 4, f"the classes span an F2 space of dimension {rank}"
    )
    return section


def check_essential(
    context: SubquotientContext, x: Element, bidegree: Bidegree
) -> EssentialWitnessSet:
    result = EssentialWitnessSet(element=str(x), bidegree=list(bidegree))
    for alpha in nonzero_scalars():
        witness = divides(context, degree_one_class(alpha), x, bidegree)
        if witness is None:
            result.failed_divisor = alpha.to_power()
            break
        result.witnesses[alpha.to_power()] = str(witness)
    return result


def is_essential_einf(
    context: SubquotientContext, x: Element, bidegree: Bidegree
) -> Optional[EssentialWitnessSet]:
    result = check_essential(context, x, bidegree)
    return result if result.is_essential else None


def essential_subspace(context: SubquotientContext, bidegree: Bidegree) -> np.ndarray:
    """
    Rows in class coordinates spanning the classes at bidegree that are divisible by
    every N(alpha a1). It's the intersection of the 15 images.
    """
    dimension = context.dimension(bidegree)
    lower = (bidegree[0] - 1, bidegree[1])
    if not dimension or not is_first_quadrant(lower):
        return linalg.zeros(0, dimension)
    common: Optional[np.ndarray] = None
    for item in h1_enumerate():
        image = linalg.row_reduce(
            context.multiplication_matrix(item.element, bidegree)
        )[0]
        common = image if common is None else linalg.intersect(common, image)
        if common.shape[0] == 0:
            break
    assert common is not None
    return common


def _class_of(text: str, coefficient: Scalar16 = ONE) -> Element:
    """
    An E-infinity expression times a scalar, before the norm is taken.
    """
    return definitions.EINF_TABLE.parse(text) * coefficient


def _lift(x: Element) -> Element:
    return definitions.lift_einf_to_e5(x)


def _check_basis_essential(
    section: Section,
    context: SubquotientContext,
    bidegree: Bidegree,
    name: str,
) -> None:
    failures = []
    basis = context.class_basis(bidegree)
    for x in basis:
        result = check_essential(context, x, bidegree)
        if not result.is_essential:
            failures.append({"class": str(x), "divisor": result.failed_divisor})
    section.check(
        name,
        bool(basis) and not failures,
        f"{len(basis)} basis classes at {bidegree} are essential",
        failures or None,
    )


def verify_lemma_h4(pipeline: SpectralPipeline) -> Section:
    section = Section("essential.h4")
    context = pipeline.einf_mod
    bidegree = (4, 0)
    _check_basis_essential(section, context, bidegree, "basis")

    a1 = definitions.E5_TABLE.generator("a1")
    a2 = definitions.E5_TABLE.generator("a2")
    wrong = []
    for alpha in nonzero_scalars():
        witness = (a1**3 + a1**2 * a2 * alpha) * inverse(alpha)
        product = degree_one_class(alpha) * witness
        if not context.same_class(product, a1**4, bidegree):
            wrong.append(str(alpha))
    section.check(
        "witness",
        not wrong,
        "N(alpha a1) alpha^-1 (a1^3 + alpha a1^2 a2) = a1^4",
        wrong or None,
    )

    listed = [x for x in definitions.PUBLISHED_H4_LISTING if "a3" not in x]
    elements = [definitions.E5_TABLE.parse(x) for x in listed + ["a8^4"]]
    rows = [context.class_coords(x, bidegree) for x in elements]
    rank = linalg.rank(linalg.as_matrix(rows, context.dimension(bidegree)))
    section.check(
        "listing_with_a8",
        rank == context.dimension(bidegree),
        f"the listing with a8^4 in place of a3^4 has rank {rank}",
    )
    section.info(
        "listing_slip",
        "the published basis of (4, 0) lists a3^4, a3 is not a generator; the "
        "computed basis contains a8^4",
    )
    return section


def verify_lemma_e64(pipeline: SpectralPipeline) -> Section:
    section = Section("essential.e64")
    context = pipeline.einf_mod
    for bidegree in [(6, 2), (6, 4)]:
        _check_basis_essential(
            section, context, bidegree, f"basis.{bidegree[0]}-{bidegree[1]}"
        )
    for first in [(2, 2), (2, 4)]:
        target = add_bidegrees(first, (4, 0))
        rows = [
            context.class_coords(x * y, target, check_cycle=False)
            for x in context.class_basis(first)
            for y in context.class_basis((4, 0))
        ]
        dimension = context.dimension(target)
        rank = linalg.rank(linalg.as_matrix(rows, dimension))
        section.check(
            f"surjective.{target[0]}-{target[1]}",
            rank == dimension,
            f"E{first} x E(4, 0) -> E{target} has rank {rank} of {dimension}",
        )
    return section


def verify_lemma_h8(
    pipeline: SpectralPipeline, seed: int = constants.DEFAULT_SEED
) -> Section:
    section = Section("essential.h8")
    context = pipeline.einf_mod
    bidegree = (4, 4)
    _check_basis_essential(section, context, bidegree, "basis")

    randomizer = random.Random(seed)
    alphas = randomizer.sample(nonzero_scalars(), 3)
    wrong = []
    for alpha in alphas:
        divisor = degree_one_class(alpha)
        identities = [
            (
                _class_of("a4*d3"),
                _class_of("a4^2*d3", alpha**4) + _class_of("a4^2*d7", alpha**8),
            ),
            (_class_of("a4*d7"), _class_of("a4^2*d7", alpha**4)),
        ]
        for left, right in identities:
            if not context.same_class(divisor * _lift(left), _lift(right), bidegree):
                wrong.append({"alpha": str(alpha), "left": str(left)})
    section.check(
        "identities",
        not wrong,
        "a4 d3 N(alpha a1) = alpha^4 a4^2 d3 + alpha^8 a4^2 d7 and "
        "a4 d7 N(alpha a1) = alpha^4 a4^2 d7 for alpha in "
        f"{[str(x) for x in alphas]}",
        wrong or None,
    )
    return section


def verify_lemma_h10(pipeline: SpectralPipeline, omega: Scalar16) -> Section:
    section = Section(f"essential.h10.{omega}")
    context = pipeline.einf_mod
    bidegree = (4, 6)
    x = _lift(norm_N(_class_of("a4*t6", omega)))
    section.check(
        "essential",
        is_essential_einf(context, x, bidegree) is not None,
        f"N({omega} a4 t6) is essential",
    )
    wrong = []
    for alpha in nonzero_scalars():
        divisor = degree_one_class(alpha)
        shifted = _lift(norm_N(_class_of("a8*t6", omega * alpha**4)))
        first = _lift(norm_N(_class_of("t6", omega * alpha**11))) * divisor
        second = (
            _lift(_class_of("t10", omega) + _class_of("t5", omega * omega)) * divisor
        )
        if not context.same_class(first, x + shifted, bidegree):
            wrong.append({"alpha": str(alpha), "identity": "first"})
        if not context.same_class(second, shifted, bidegree):
            wrong.append({"alpha": str(alpha), "identity": "second"})
    section.check(
        "identities",
        not wrong,
        "N(w alpha^11 t6) N(alpha a1) = x + N(w alpha^4 a8 t6) and "
        "(w t10 + w^2 t5) N(alpha a1) = N(w alpha^4 a8 t6) for all alpha",
        wrong or None,
    )
    return section


def _h6_witness(lam: Scalar16, alpha: Scalar16, coefficient: Scalar16) -> Element:
    return _lift(
        norm_N(
            _class_of("a4*b7", lam * alpha**11) + _class_of("a8*b7", coefficient)
        )
    )


def verify_lemma_h6(pipeline: SpectralPipeline, lam: Scalar16) -> Section:
    """
    x = N(lam a4^2 b7) at (4, 2) for trace(lam) = 0. With mu^2 + mu = lam, the
    witness for N(alpha a1) is N(lam alpha^11 a4 b7 + mu^2 a8 b7).
    """
    section = Section(f"essential.h6.{lam}")
    context = pipeline.einf_mod
    bidegree = (4, 2)
    x = _lift(norm_N(_class_of("a4^2*b7", lam)))
    if not lam:
        section.check("zero", x.is_zero, "lambda = 0 gives x = 0")
        return section
    mu = solve_artin_schreier(lam)
    if not section.check(
        "artin_schreier", mu is not None, f"mu^2 + mu = {lam} is solvable"
    ):
        return section
    assert mu is not None
    section.check(
        "essential",
        is_essential_einf(context, x, bidegree) is not None,
        f"N({lam} a4^2 b7) is essential",
    )

    wrong = []
    published_holds = True
    for alpha in nonzero_scalars():
        divisor = degree_one_class(alpha)
        if not context.same_class(
            divisor * _h6_witness(lam, alpha, mu * mu), x, bidegree
        ):
            wrong.append(str(alpha))
        if not context.same_class(divisor * _h6_witness(lam, alpha, mu), x, bidegree):
            published_holds = False
    section.check(
        "identity",
        not wrong,
        f"N(alpha a1) N(lam alpha^11 a4 b7 + mu^2 a8 b7) = x, mu = {mu}",
        wrong or None,
    )
    section.info(
        "published_identity",
        f"with mu a8 b7 in place of mu^2 a8 b7 the identity "
        f"{'holds' if published_holds else 'fails'} for lambda = {lam}",
    )
    return section


def verify_products(pipeline: SpectralPipeline) -> Section:
    """
    Two essential classes whose product is the last survivor xi.
    """
    section = Section("products")
    context = pipeline.einf_mod
    bidegree = definitions.LAST_SURVIVOR_BIDEGREE
    xi, survivor = last_survivor(pipeline)
    if xi is None:
        section.extend(survivor)
        return section
    zeta_xi = xi * ZETA
    section.check(
        "norm_of_zeta_xi",
        context.same_class(norm_N(zeta_xi), xi, bidegree),
        "N(z xi) = xi",
    )
    survivor_e5 = definitions.E5_TABLE.parse(definitions.SURVIVOR_E5_FORM)

    for omega in f4_units():
        name = f"ess10-4.{omega}"
        eta = _class_of("a4*t6", omega)
        theta = _class_of("a4^3*a8", inverse(omega) * ZETA)
        half = _lift(eta) * _lift(norm_N(theta))
        section.check(
            f"{name}.partial",
            context.same_class(half, zeta_xi, bidegree)
            and context.same_class(half, survivor_e5 * ZETA, bidegree),
            f"{omega} a4 t6 N({inverse(omega) * ZETA} a4^3 a8) = z a4^5 a8 b7 u10^4",
        )
        product = _lift(norm_N(eta)) * _lift(norm_N(theta))
        section.check(
            f"{name}.product",
            context.same_class(product, xi, bidegree) and not xi.is_zero,
            "eta theta = xi",
        )
        section.check(
            f"{name}.essential",
            is_essential_einf(context, _lift(norm_N(eta)), (4, 6)) is not None
            and is_essential_einf(context, _lift(norm_N(theta)), (4, 0)) is not None,
            "eta and theta are essential",
        )

    for lam in trace_zero_units():
        name = f"ess8-6.{lam}"
        phi = _class_of("a4^2*b7", lam)
        psi = _class_of("a4^3*a8*u10_4", inverse(lam) * ZETA)
        half = _lift(phi) * _lift(norm_N(psi))
        section.check(
            f"{name}.partial",
            context.same_class(half, zeta_xi, bidegree),
            f"{lam} a4^2 b7 N({inverse(lam) * ZETA} a4^3 a8 u10^4) = z xi",
        )
        product = _lift(norm_N(phi)) * _lift(norm_N(psi))
        section.check(
            f"{name}.product",
            context.same_class(product, xi, bidegree),
            "phi psi = xi",
        )
        psi_class = _lift(norm_N(_class_of("a4^2*d7", inverse(lam) * ZETA)))
        section.check(
            f"{name}.essential",
            is_essential_einf(context, _lift(norm_N(phi)), (4, 2)) is not None
            and is_essential_einf(context, psi_class, (4, 4)) is not None
            and context.same_class(psi_class, _lift(norm_N(psi)), (4, 4)),
            "phi and psi are essential",
        )
    section.info(
        "ess8-6.published_form",
        "the product is written z a4^4 t6, which has bidegree (7, 6); the class "
        f"at {bidegree} is z a4^4 a8 t6 = z {definitions.SURVIVOR_E5_FORM}",
    )
    for prefix in ("ess10-4", "ess8-6"):
        failed = [
            x.id
            for x in section.results
            if x.id.startswith(f"products.{prefix}.") and x.status == CheckStatus.FAIL
        ]
        section.check(
            f"prop-{prefix}",
            not failed,
            "two essential classes multiply to xi",
            failed or None,
        )
    return section


def _scan_bidegrees(pipeline: SpectralPipeline) -> List[Bidegree]:
    return [
        x
        for x in pipeline.bidegrees()
        if sum(x) <= SCAN_DEGREE and pipeline.einf_mod.is_computable(x)
    ]


def essential_bases(pipeline: SpectralPipeline) -> Dict[Bidegree, np.ndarray]:
    """
    The essential subspace of every scanned bidegree, in class coordinates. The
    result is kept on the pipeline.
    """
    cached = pipeline.shared.get(_BASES_KEY)
    if cached is not None:
        return dict(cached)
    context = pipeline.einf_mod
    result: Dict[Bidegree, np.ndarray] = {}

    def _task(bidegree: Bidegree) -> Tuple[Bidegree, np.ndarray]:
        return bidegree, essential_subspace(context, bidegree)

    def _store(item: Tuple[Bidegree, np.ndarray]) -> None:
        result[item[0]] = item[1]

    timer = create_timer()
    bidegrees = _scan_bidegrees(pipeline)
    # slices and homology are shared, so they are built before the workers start.
    for bidegree in bidegrees:
        context.dimension(bidegree)
    run_in_parallel(
        [partial(_task, x) for x in bidegrees], _store, pipeline.concurrency
    )
    _log.info(f"scanned {len(bidegrees)} bidegrees for essential classes in {timer}")
    bases = {x: result[x] for x in bidegrees}
    pipeline.shared[_BASES_KEY] = bases
    return dict(bases)


def essential_scan(pipeline: SpectralPipeline) -> Tuple[Dict[int, int], Section]:
    section = Section("essential.scan")
    bases = essential_bases(pipeline)
    by_degree: Dict[int, int] = {n: 0 for n in range(SCAN_DEGREE + 1)}
    for bidegree, rows in bases.items():
        by_degree[sum(bidegree)] += rows.shape[0]

    missing = [
        list(x)
        for x in pipeline.bidegrees()
        if sum(x) <= SCAN_DEGREE and x not in bases
    ]
    if missing:
        section.info(
            "not_computable",
            f"{len(missing)} bidegrees of degree <= {SCAN_DEGREE} are outside of "
            "the window",
            missing,
        )

    section.check(
        "degree-1", by_degree[1] == 0, f"{by_degree[1]} essential classes in degree 1"
    )
    for degree, count in definitions.COMPUTER_ESSENTIAL_COUNTS.items():
        found = by_degree[degree]
        if degree in definitions.CONFIRMED_ESSENTIAL_DEGREES:
            section.check(
                f"degree-{degree}",
                found >= count,
                f"{found} essential classes in degree {degree}, at least {count}",
            )
        else:
            section.info(
                f"degree-{degree}",
                f"{found} essential classes in degree {degree}, {count} generators "
                "in the computer report",
            )
    section.info(
        "generators",
        f"{sum(definitions.COMPUTER_ESSENTIAL_COUNTS.values())} module generators in "
        "the computer report",
        definitions.COMPUTER_ESSENTIAL_COUNTS,
    )
    section.info("dimensions", "essential dimensions by degree", by_degree)
    return by_degree, section


def _essential_elements(
    pipeline: SpectralPipeline, bases: Dict[Bidegree, np.ndarray]
) -> List[Tuple[Bidegree, Element]]:
    context = pipeline.einf_mod
    return [
        (bidegree, context.class_element(row, bidegree))
        for bidegree, rows in bases.items()
        for row in rows
    ]


def _product_class(
    context: SubquotientContext, x: Element, y: Element, bidegree: Bidegree
) -> Optional[np.ndarray]:
    if not context.space.in_window(bidegree) or not context.is_computable(bidegree):
        return None
    return context.class_coords(x * y, bidegree, check_cycle=False)


def pairwise_product_scan(
    pipeline: SpectralPipeline, bases: Optional[Dict[Bidegree, np.ndarray]] = None
) -> Section:
    """
    Products of two essential basis classes are zero apart from multiples of xi,
    and products of three vanish, everything modulo the parameters.
    """
    section = Section("products.pairwise")
    context = pipeline.einf_mod
    if bases is None:
        bases = essential_bases(pipeline)
    elements = _essential_elements(pipeline, bases)
    top = definitions.FORMAL_DIMENSION

    nonzero: List[Tuple[Bidegree, Element]] = []
    misplaced = []
    skipped = 0
    for i, (first_bidegree, first) in enumerate(elements):
        for second_bidegree, second in elements[i:]:
            target = add_bidegrees(first_bidegree, second_bidegree)
            coords = _product_class(context, first, second, target)
            if coords is None:
                skipped += 1
                continue
            if coords.any():
                if sum(target) == top:
                    nonzero.append((target, first * second))
                else:
                    misplaced.append([str(first), str(second)])
    section.check(
        "degrees",
        not misplaced,
        f"{len(nonzero)} nonzero products, all in degree {top}",
        misplaced[:10] or None,
    )
    if skipped:
        section.info("skipped", f"{skipped} products land outside of the window")

    triple = []
    checked = 0
    for bidegree, product in nonzero:
        for other_bidegree, other in elements:
            target = add_bidegrees(bidegree, other_bidegree)
            coords = _product_class(context, product, other, target)
            if coords is None:
                continue
            checked += 1
            if coords.any():
                triple.append([str(product), str(other)])
    section.check(
        "triple",
        not triple,
        f"{checked} products of three essential classes vanish in the window",
        triple[:10] or None,
    )
    return section


def check_essential_properties(
    pipeline: SpectralPipeline,
    samples: int,
    seed: int = constants.DEFAULT_SEED,
    bases: Optional[Dict[Bidegree, np.ndarray]] = None,
) -> Section:
    """
    Essential classes form an ideal, are closed under F and under nonzero scalars.
    """
    section = Section("properties.essential")
    context = pipeline.einf_mod
    if bases is None:
        bases = essential_bases(pipeline)
    elements = [x for x in _essential_elements(pipeline, bases) if sum(x[0]) <= 10]
    if not elements:
        section.info("empty", "no essential classes in the window")
        return section
    factors = [
        (x, y)
        for x in [(1, 0), (2, 0), (2, 2)]
        for y in context.class_basis(x)
    ]
    randomizer = random.Random(seed)
    ideal_failures = []
    frobenius_failures = []
    scalar_failures = []
    for _ in range(samples):
        bidegree, x = randomizer.choice(elements)
        factor_bidegree, y = randomizer.choice(factors)
        target = add_bidegrees(bidegree, factor_bidegree)
        if context.space.in_window(target) and context.is_computable(target):
            if is_essential_einf(context, x * y, target) is None:
                ideal_failures.append([str(x), str(y)])
        if is_essential_einf(context, frobenius_map(x), bidegree) is None:
            frobenius_failures.append(str(x))
        scalar = Scalar16(randomizer.randrange(1, 16))
        if is_essential_einf(context, x * scalar, bidegree) is None:
            scalar_failures.append(str(x))
    section.check(
        "ideal",
        not ideal_failures,
        f"x y is essential for essential x on {samples} samples",
        ideal_failures[:5] or None,
    )
    section.check(
        "frobenius",
        not frobenius_failures,
        "F(x) is essential for essential x",
        frobenius_failures[:5] or None,
    )
    section.check(
        "scalar",
        not scalar_failures,
        "c x is essential for essential x",
        scalar_failures[:5] or None,
    )
    return section


def verify_essential_lemmas(
    pipeline: SpectralPipeline, seed: int = constants.DEFAULT_SEED
) -> List[Section]:
    sections = [
        check_h1(),
        verify_lemma_h4(pipeline),
        verify_lemma_e64(pipeline),
        verify_lemma_h8(pipeline, seed),
    ]
    sections.extend(verify_lemma_h10(pipeline, x) for x in f4_units())
    sections.extend(verify_lemma_h6(pipeline, x) for x in trace_zero_units())
    return sections


def parse_class(text: str) -> Tuple[Element, Bidegree]:
    """
    Reads an E-infinity expression and returns its E5 representative.
    """
    x = definitions.einf(text)
    bidegree = bidegree_of(x)
    if bidegree is None:
        raise DomainException(f"'{text}' is zero or not bihomogeneous")
    return x, bidegree


def check_expression(
    pipeline: SpectralPipeline, texts: Sequence[str]
) -> List[EssentialWitnessSet]:
    context = pipeline.einf_mod
    results = []
    for text in texts:
        x, bidegree = parse_class(text)
        results.append(check_essential(context, x, bidegree))
    return results
