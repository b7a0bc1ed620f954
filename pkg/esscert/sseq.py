# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
The pages E2 -> E3 -> E4 = E5 -> E6 = E-infinity and the checks of every claimed
generator, relation, basis and dimension on them.

Windows: E5 is built on p <= pmax, q <= qmax. E3 is built three columns and two rows
further, so that d3 homology is available on the whole E5 window. E2 is free and
grows fast, so E2 -> E3 is checked on the smaller window e3_pmax, e3_qmax.
"""

import logging
import random
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from esscert import definitions, linalg
from esscert.bigraded import (
    ALL_WEIGHTS,
    Bidegree,
    Element,
    add_bidegrees,
    bidegree_of,
    frobenius_map,
    is_frobenius_stable,
    norm_N,
    weight_of,
)
from esscert.definitions import ClaimedBasis
from esscert.pages import (
    Derivation,
    PageSpace,
    SubquotientContext,
    is_first_quadrant,
)
from esscert.report import Section
from esscert.scalars import OMEGA, Scalar16, inverse
from esscert.util import EsscertException, constants
from esscert.util.logger import get_logger
from esscert.util.perf_timer import create_timer

_log = get_logger("sseq")


def _bidegree_id(bidegree: Bidegree) -> str:
    return f"{bidegree[0]}-{bidegree[1]}"


class SpectralPipeline:
    """
    Builds the pages and subquotient contexts on first use and shares them between
    the check groups.
    """

    def __init__(
        self,
        pmax: int = constants.DEFAULT_PMAX,
        qmax: int = constants.DEFAULT_QMAX,
        e3_pmax: int = constants.DEFAULT_E3_PMAX,
        e3_qmax: int = constants.DEFAULT_E3_QMAX,
        concurrency: int = 1,
    ) -> None:
        self.pmax = pmax
        self.qmax = qmax
        # E2 -> E3 is compared inside of the E3 window only.
        self.e3_pmax = min(e3_pmax, pmax)
        self.e3_qmax = min(e3_qmax, qmax)
        self.concurrency = concurrency
        # results that several check groups use, like the essential subspaces.
        self.shared: Dict[str, Any] = {}

    def _build(self, space: PageSpace) -> PageSpace:
        if self.concurrency > 1:
            timer = create_timer()
            space.populate(self.concurrency)
            _log.info(f"built {space.name} on {space.window} in {timer}")
        return space

    @cached_property
    def e2_space(self) -> PageSpace:
        return self._build(
            PageSpace(
                definitions.e2_presentation(), (self.e3_pmax + 2, self.e3_qmax + 1)
            )
        )

    @cached_property
    def e3_space(self) -> PageSpace:
        return self._build(
            PageSpace(definitions.e3_presentation(), (self.pmax + 3, self.qmax + 2))
        )

    @cached_property
    def e5_space(self) -> PageSpace:
        return self._build(
            PageSpace(definitions.e5_presentation(), (self.pmax, self.qmax))
        )

    @cached_property
    def h2(self) -> SubquotientContext:
        return SubquotientContext("E2/d2", self.e2_space, definitions.d2())

    @cached_property
    def h3(self) -> SubquotientContext:
        return SubquotientContext("E3/d3", self.e3_space, definitions.d3())

    @cached_property
    def einf(self) -> SubquotientContext:
        return SubquotientContext("E5/d5", self.e5_space, definitions.d5())

    @cached_property
    def einf_mod(self) -> SubquotientContext:
        """
        E-infinity modulo the parameters u5^8, u10^8.
        """
        return SubquotientContext(
            "E5/d5 mod (u5^8, u10^8)",
            self.e5_space,
            definitions.d5(),
            self.parameters(),
        )

    @cached_property
    def einf_rational(self) -> SubquotientContext:
        """
        E-infinity modulo the parameter system that is defined over F2.
        """
        return SubquotientContext(
            "E5/d5 mod rational parameters",
            self.e5_space,
            definitions.d5(),
            self.rational_parameters(),
        )

    def parameters(self) -> List[Element]:
        return [definitions.einf("u5_8"), definitions.einf("u10_8")]

    def rational_parameters(self) -> List[Element]:
        first, second = self.parameters()
        return [first + second, first * OMEGA + second * (OMEGA * OMEGA)]

    def bidegrees(self) -> List[Bidegree]:
        return self.e5_space.bidegrees()

    def e3_check_bidegrees(self) -> List[Bidegree]:
        return [
            (p, q) for q in range(self.e3_qmax + 1) for p in range(self.e3_pmax + 1)
        ]

    def context(self, page: str) -> SubquotientContext:
        return {
            constants.PAGE_E2: self.h2,
            constants.PAGE_E3: self.h3,
            constants.PAGE_EINF: self.einf_mod,
        }[page]

    def dimension_table(self, page: str) -> Dict[Bidegree, int]:
        """
        Dimensions of a page on its window. Non computable entries are -1.
        """
        if page == constants.PAGE_E2:
            space, bidegrees = self.e2_space, self.e2_space.bidegrees()
            return {x: space.dimension(x) for x in bidegrees}
        if page == constants.PAGE_E3:
            return {
                x: self.e3_space.dimension(x)
                for x in self.e3_space.bidegrees()
                if x[0] <= self.pmax and x[1] <= self.qmax
            }
        if page == constants.PAGE_E4:
            return {x: self.e5_space.dimension(x) for x in self.bidegrees()}
        if page == constants.PAGE_EINF:
            context = self.einf_mod
            return {
                x: context.dimension(x) if context.is_computable(x) else -1
                for x in self.bidegrees()
            }
        raise EsscertException(f"unknown page '{page}'")

    def certificate(self) -> Dict[str, Any]:
        spaces = [self.e3_space, self.e5_space]
        contexts = [
            (self.h3, self.bidegrees()),
            (self.einf, self.bidegrees()),
            (self.einf_mod, self.bidegrees()),
        ]
        return {
            "window": [self.pmax, self.qmax],
            "e3_window": [self.e3_pmax, self.e3_qmax],
            "pages": [x.dump() for x in spaces],
            "differentials": [x.dump(bidegrees) for x, bidegrees in contexts],
        }


def render_table(
    table: Dict[Bidegree, int], pmax: int, qmax: int, width: int = 3
) -> List[str]:
    """
    Rows q = qmax ... 0 and columns p = 0 ... pmax. Zero entries are empty, entries
    outside of the computable window are "?".
    """
    lines = []
    for q in range(qmax, -1, -1):
        cells = []
        for p in range(pmax + 1):
            value = table.get((p, q), 0)
            text = "?" if value < 0 else (str(value) if value else "")
            cells.append(f"{text:>{width}}")
        lines.append(f"{q:>2} |" + "".join(cells))
    lines.append("   +" + "-" * (width * (pmax + 1)))
    lines.append("    " + "".join(f"{p:>{width}}" for p in range(pmax + 1)))
    return lines


def build_e2(pipeline: SpectralPipeline) -> PageSpace:
    return pipeline.e2_space


def _check_claim(
    section: Section,
    claim: ClaimedBasis,
    parse: Callable[[str], Element],
    coords: Callable[[Element, Bidegree], np.ndarray],
    dimension: Callable[[Bidegree], int],
    bidegrees: Sequence[Bidegree],
) -> None:
    """
    Checks that the claimed elements of each bidegree form a basis and that F acts
    on them as claimed. Classes are compared by coordinates.
    """
    allowed = {x for x in bidegrees if x[1] == claim.q}
    parsed: Dict[str, Tuple[Element, Bidegree]] = {}
    for text in claim.elements:
        element = parse(text)
        bidegree = bidegree_of(element) if element else None
        if bidegree is None:
            section.check(
                f"{claim.name}.parse", False, f"'{text}' is zero or inhomogeneous"
            )
            return
        if bidegree in allowed:
            parsed[text] = (element, bidegree)

    failures = []
    for bidegree in sorted(allowed):
        texts = [x for x, (_, y) in parsed.items() if y == bidegree]
        expected = dimension(bidegree)
        rows = linalg.as_matrix(
            [coords(parsed[x][0], bidegree) for x in texts], expected
        )
        rank = linalg.rank(rows)
        if not (len(texts) == rank == expected):
            failures.append(
                {
                    "bidegree": list(bidegree),
                    "claimed": len(texts),
                    "rank": rank,
                    "dimension": expected,
                }
            )
    section.check(
        f"{claim.name}.basis",
        not failures,
        f"{len(parsed)} claimed elements on {len(allowed)} bidegrees",
        failures or None,
    )

    keys: Dict[Tuple[Bidegree, bytes], str] = {}
    for text, (element, bidegree) in parsed.items():
        if text not in claim.excluded:
            keys[(bidegree, coords(element, bidegree).tobytes())] = text
    successor: Dict[str, str] = {}
    missing = []
    for text, (element, bidegree) in parsed.items():
        if text in claim.excluded:
            continue
        image = coords(frobenius_map(element), bidegree).tobytes()
        target = keys.get((bidegree, image))
        if target is None:
            missing.append(text)
        else:
            successor[text] = target
    is_permutation = not missing and len(set(successor.values())) == len(successor)
    section.check(
        f"{claim.name}.frobenius_permutes",
        is_permutation,
        "F permutes the basis" if is_permutation else "F leaves the basis",
        missing or None,
    )
    if is_permutation:
        lengths: Dict[str, int] = {}
        for start in successor:
            current, length = successor[start], 1
            while current != start:
                current, length = successor[current], length + 1
            lengths[start] = length
        expected_short = {
            x: len(orbit)
            for orbit in claim.short_orbits
            for x in orbit
            if x in parsed
        }
        wrong = sorted(
            x for x, length in lengths.items() if length != expected_short.get(x, 4)
        )
        section.check(
            f"{claim.name}.orbits",
            not wrong,
            f"orbit lengths: {_orbit_counts(lengths)}",
            wrong or None,
        )

    for text in claim.orbit_sum_zero:
        if text not in parsed:
            continue
        element, bidegree = parsed[text]
        section.check(
            f"{claim.name}.orbit_sum",
            not coords(norm_N(element), bidegree).any(),
            f"N({text}) = 0",
        )


def _orbit_counts(lengths: Dict[str, int]) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for length in lengths.values():
        counts[length] = counts.get(length, 0) + 1
    # each orbit is counted once per member
    return {k: v // k for k, v in sorted(counts.items())}


def verify_e3(pipeline: SpectralPipeline) -> Section:
    section = Section("e3")
    timer = create_timer()
    h2 = pipeline.h2
    e3 = pipeline.e3_space

    for name, text in definitions.E2_TO_E3_LIFTS.items():
        lifted = definitions.E2_TABLE.parse(text)
        bidegree = bidegree_of(lifted)
        assert bidegree
        section.check(
            f"generators.{name}.cycle",
            h2.is_cycle(lifted, bidegree),
            f"{name} = {text}",
        )
    for index, text in enumerate(definitions.E3_RELATIONS):
        relation = definitions.E2_TABLE.parse(text)
        bidegree = bidegree_of(relation)
        assert bidegree
        section.check(
            f"relations.{index}", h2.is_zero_class(relation, bidegree), f"{text} = 0"
        )

    mismatches = []
    for bidegree in pipeline.e3_check_bidegrees():
        basis = e3.bidegree_basis(bidegree)
        dimension = h2.dimension(bidegree)
        rows = [
            h2.class_coords(definitions.lift_e3_to_e2(x), bidegree) for x in basis
        ]
        rank = linalg.rank(linalg.as_matrix(rows, dimension))
        if not (len(basis) == dimension == rank):
            mismatches.append(
                {
                    "bidegree": list(bidegree),
                    "presented": len(basis),
                    "homology": dimension,
                    "rank": rank,
                }
            )
    section.check(
        "presentation.isomorphic",
        not mismatches,
        f"E3 presentation against d2 homology on p <= {pipeline.e3_pmax}, "
        f"q <= {pipeline.e3_qmax}",
        mismatches or None,
    )
    for bidegree, expected in [((0, 2), 2), ((2, 0), 8)]:
        if bidegree in pipeline.e3_check_bidegrees():
            actual = h2.dimension(bidegree)
            section.check(
                f"dimension.{_bidegree_id(bidegree)}",
                actual == expected,
                f"dim {bidegree} = {actual}, expected {expected}",
            )
    if (1, 1) in pipeline.e3_check_bidegrees():
        section.info("dimension.1-1", f"dim (1, 1) = {h2.dimension((1, 1))}")

    wrong = [
        p for p in range(1, pipeline.pmax + 1) if e3.dimension((p, 0)) != 4 * p
    ]
    section.check("row0.dimension", not wrong, "dim E3(p,0) = 4p", wrong or None)
    for claim in definitions.e3_claims(pipeline.pmax):
        _check_claim(
            section,
            claim,
            definitions.E3_TABLE.parse,
            e3.coords,
            e3.dimension,
            [(p, 0) for p in range(pipeline.pmax + 1)],
        )

    h3 = pipeline.h3
    u5_4 = definitions.E3_TABLE.parse("u5_2^2")
    u10_4 = definitions.E3_TABLE.parse("u10_2^2")
    cycle_failures = []
    for p in range(pipeline.pmax + 1):
        if pipeline.qmax < 4:
            break
        bidegree = (p, 4)
        cycles = h3.cycle_basis((p, 0))
        products = [e3.coords(x * y, bidegree) for x in cycles for y in (u5_4, u10_4)]
        rank = linalg.rank(linalg.as_matrix(products, e3.dimension(bidegree)))
        dimension = h3.cycle_dimension(bidegree)
        if not (rank == dimension == 2 * len(cycles)):
            cycle_failures.append(
                {"p": p, "rank": rank, "cycles": dimension, "row0": len(cycles)}
            )
    section.check(
        "cycles.row4",
        not cycle_failures,
        "Z3(p,4) = u5^4 Z3(p,0) + u10^4 Z3(p,0)",
        cycle_failures or None,
    )
    _log.info(f"verified E3 in {timer}")
    return section


def verify_e4(pipeline: SpectralPipeline) -> Section:
    section = Section("e4")
    timer = create_timer()
    h3 = pipeline.h3
    e5 = pipeline.e5_space

    for name, text in definitions.E5_TO_E3_LIFTS.items():
        lifted = definitions.E3_TABLE.parse(text)
        bidegree = bidegree_of(lifted)
        assert bidegree
        section.check(
            f"generators.{name}.cycle",
            h3.is_cycle(lifted, bidegree),
            f"{name} = {text}",
        )

    for label, relations in (
        ("generating", definitions.E4_RELATIONS),
        ("derived", definitions.E4_DERIVED_RELATIONS),
    ):
        for index, text in enumerate(relations):
            relation = definitions.lift_e5_to_e3(definitions.E5_TABLE.parse(text))
            bidegree = relation.bidegrees()[0] if relation else None
            holds = relation.is_zero or (
                bidegree is not None and h3.is_zero_class(relation, bidegree)
            )
            section.check(f"relations.{label}.{index}", holds, f"{text} = 0")

    mismatches = []
    for bidegree in pipeline.bidegrees():
        basis = e5.bidegree_basis(bidegree)
        dimension = h3.dimension(bidegree)
        rows = [
            h3.class_coords(definitions.lift_e5_to_e3(x), bidegree) for x in basis
        ]
        rank = linalg.rank(linalg.as_matrix(rows, dimension))
        if not (len(basis) == dimension == rank):
            mismatches.append(
                {
                    "bidegree": list(bidegree),
                    "presented": len(basis),
                    "homology": dimension,
                    "rank": rank,
                }
            )
    section.check(
        "presentation.isomorphic",
        not mismatches,
        f"E4 presentation against d3 homology on p <= {pipeline.pmax}, "
        f"q <= {pipeline.qmax}",
        mismatches or None,
    )
    for bidegree, expected in [((2, 2), 4)]:
        if e5.in_window(bidegree):
            actual = h3.dimension(bidegree)
            section.check(
                f"dimension.{_bidegree_id(bidegree)}",
                actual == expected,
                f"dim {bidegree} = {actual}, expected {expected}",
            )

    for claim in definitions.e4_claims(pipeline.pmax):
        _check_claim(
            section,
            claim,
            definitions.E5_TABLE.parse,
            e5.coords,
            e5.dimension,
            pipeline.bidegrees(),
        )

    wrong = []
    for p, q in pipeline.bidegrees():
        expected = (q // 4 + 1) * e5.dimension((p, q % 4))
        if e5.dimension((p, q)) != expected:
            wrong.append([p, q])
    section.check(
        "tensor_decomposition",
        not wrong,
        "dim E4(p,q) = (q div 4 + 1) dim E4(p, q mod 4)",
        wrong or None,
    )

    for index, (left, right) in enumerate(definitions.E4_IDENTITIES):
        x = definitions.E5_TABLE.parse(left)
        y = definitions.E5_TABLE.parse(right)
        bidegree = bidegree_of(x)
        assert bidegree
        if e5.in_window(bidegree):
            section.check(
                f"identities.{index}",
                e5.is_zero(x + y, bidegree),
                f"{left} = {right}",
            )
    _log.info(f"verified E4 in {timer}")
    return section


def verify_differential_tables(
    pipeline: SpectralPipeline, values: Sequence[int] = (0, 1, 2)
) -> Section:
    """
    Spot checks of the published action of d3 and d5, on the instances of every
    family that fit into the window.
    """
    section = Section("e4.differentials")
    pages: Dict[int, Tuple[PageSpace, Derivation, Any, Callable[[Element], Element]]]
    pages = {
        3: (
            pipeline.e3_space,
            definitions.d3(),
            definitions.E3_TABLE,
            lambda x: definitions.lift_e5_to_e3(x),
        ),
        5: (
            pipeline.e5_space,
            definitions.d5(),
            definitions.E5_TABLE,
            lambda x: definitions.lift_einf_to_e5(x),
        ),
    }
    next_tables = {3: definitions.E5_TABLE, 5: definitions.EINF_TABLE}
    for claim in definitions.DIFFERENTIAL_CLAIMS:
        space, derivation, table, lift = pages[claim.page]
        failures = []
        checked = 0
        for r, s, source_text, target_text in claim.instances(values):
            source = table.parse(source_text)
            bidegree = bidegree_of(source)
            assert bidegree
            target_bidegree = add_bidegrees(bidegree, derivation.shift)
            if not space.in_window(bidegree) or not space.in_window(target_bidegree):
                continue
            target = lift(next_tables[claim.page].parse(target_text))
            try:
                holds = np.array_equal(
                    space.coords(derivation.apply(source), target_bidegree),
                    space.coords(target, target_bidegree),
                )
            except EsscertException as identifier:
                holds = False
                _log.debug(f"{claim.name} r={r} s={s}: {identifier}")
            checked += 1
            if not holds:
                failures.append({"r": r, "s": s, "source": source_text})
        if checked:
            section.check(
                claim.name,
                not failures,
                f"{claim.source} -> {claim.target} on {checked} instances",
                failures or None,
            )
        else:
            section.info(claim.name, "outside of the window")
    return section


def verify_e4_equals_e5(pipeline: SpectralPipeline) -> Section:
    section = Section("e5")
    wrong = [
        list(x)
        for x in pipeline.bidegrees()
        if x[1] % 2
        and (pipeline.e5_space.dimension(x) or pipeline.h3.dimension(x))
    ]
    section.check(
        "odd_rows_vanish",
        not wrong,
        "E4 vanishes in odd q, so d4 = 0 and E5 = E4",
        wrong or None,
    )
    for bidegree in [(3, 1), (5, 3)]:
        if pipeline.e5_space.in_window(bidegree):
            section.check(
                f"dimension.{_bidegree_id(bidegree)}",
                pipeline.h3.dimension(bidegree) == 0,
                f"dim {bidegree} = 0",
            )
    return section


def _computable(
    pipeline: SpectralPipeline, context: SubquotientContext
) -> List[Bidegree]:
    return [x for x in pipeline.bidegrees() if context.is_computable(x)]


def verify_einf(pipeline: SpectralPipeline) -> Section:
    section = Section("einf")
    timer = create_timer()
    einf = pipeline.einf
    quotient = pipeline.einf_mod

    for name in definitions.EINF_GENERATORS:
        generator = definitions.einf(name)
        bidegree = bidegree_of(generator)
        assert bidegree
        if einf.space.in_window(add_bidegrees(bidegree, einf.shift)):
            section.check(
                f"generators.{name}.cycle", einf.is_cycle(generator, bidegree), ""
            )
    for index, text in enumerate(definitions.EINF_EXTRA_RELATIONS):
        relation = definitions.einf(text)
        bidegree = bidegree_of(relation)
        assert bidegree
        if einf.is_computable(bidegree):
            section.check(
                f"d5_images.{index}",
                einf.is_zero_class(relation, bidegree),
                f"{text} = 0",
            )

    computable = _computable(pipeline, quotient)
    for claim in definitions.einf_claims():
        _check_claim(
            section,
            claim,
            definitions.einf,
            quotient.class_coords,
            quotient.dimension,
            computable,
        )

    wrong = []
    for bidegree in computable:
        expected = definitions.EINF_QUOTIENT_DIMENSIONS.get(bidegree, 0)
        actual = quotient.dimension(bidegree)
        if actual != expected:
            wrong.append(
                {"bidegree": list(bidegree), "expected": expected, "actual": actual}
            )
    section.check(
        "quotient_dimensions",
        not wrong,
        f"dim E-infinity/(u5^8, u10^8) on {len(computable)} bidegrees",
        wrong or None,
    )
    for bidegree in [(3, 4), (4, 6), (8, 6)]:
        if bidegree in computable:
            expected = definitions.EINF_QUOTIENT_DIMENSIONS[bidegree]
            actual = quotient.dimension(bidegree)
            section.check(
                f"dimension.{_bidegree_id(bidegree)}",
                actual == expected,
                f"dim {bidegree} = {actual}, expected {expected}",
            )
    skipped = [list(x) for x in pipeline.bidegrees() if x not in set(computable)]
    if skipped:
        section.info(
            "not_computable",
            f"{len(skipped)} bidegrees need neighbours outside of the window",
            skipped,
        )

    wrong = [
        list(x)
        for x in computable
        if (x[1] == 0 and x[0] >= 6 or x[1] == 2 and x[0] >= 7)
        and quotient.dimension(x)
    ]
    section.check(
        "degeneration",
        not wrong,
        "E6(p,0) = 0 for p >= 6 and E6(p,2) = 0 for p >= 7",
        wrong or None,
    )

    _check_full_einf(pipeline, section)
    _check_parameter_complements(pipeline, section)
    _log.lines(
        logging.DEBUG,
        render_table(
            pipeline.dimension_table(constants.PAGE_EINF),
            constants.EINF_TABLE_SIZE,
            constants.EINF_TABLE_SIZE,
        ),
        prefix="E-infinity/(u5^8, u10^8) ",
    )
    _log.info(f"verified E-infinity in {timer}")
    return section


def _check_full_einf(pipeline: SpectralPipeline, section: Section) -> None:
    """
    E-infinity is free over the parameters: dim E(p,q) is the sum of
    (k + 1) dim Q(p, q - 8k) over k, where Q is the quotient by the parameters.
    """
    einf = pipeline.einf
    quotient = pipeline.einf_mod
    wrong = []
    skipped = []
    for p, q in pipeline.bidegrees():
        needed = [(p, q - 8 * k) for k in range(q // 8 + 1)]
        if not einf.is_computable((p, q)) or not all(
            quotient.is_computable(x) for x in needed
        ):
            skipped.append([p, q])
            continue
        expected = sum(
            (k + 1) * quotient.dimension(x) for k, x in enumerate(needed)
        )
        actual = einf.dimension((p, q))
        if actual != expected:
            wrong.append({"bidegree": [p, q], "expected": expected, "actual": actual})
    section.check(
        "free_over_parameters",
        not wrong,
        "dim E-infinity = sum of (k + 1) dim Q(p, q - 8k)",
        wrong or None,
    )
    if skipped:
        section.info(
            "free_over_parameters.skipped",
            f"{len(skipped)} bidegrees are not computable",
            skipped,
        )


def _check_parameter_complements(pipeline: SpectralPipeline, section: Section) -> None:
    einf = pipeline.einf
    parameters = pipeline.parameters()
    chis = [definitions.einf("x5"), definitions.einf("x10")]
    for q, extra in ((8, chis), (10, [])):
        lower = q - 8
        wrong = []
        skipped = []
        for p in range(pipeline.pmax + 1):
            bidegree = (p, q)
            if q > pipeline.qmax:
                break
            if not einf.is_computable(bidegree) or not einf.is_computable((p, lower)):
                skipped.append(p)
                continue
            below = einf.class_basis((p, lower))
            vectors = [
                einf.class_coords(x * y, bidegree, check_cycle=False)
                for x in parameters
                for y in below
            ]
            vectors += [
                einf.class_coords(x, bidegree)
                for x in extra
                if bidegree_of(x) == bidegree
            ]
            dimension = einf.dimension(bidegree)
            rank = linalg.rank(linalg.as_matrix(vectors, dimension))
            if not (rank == len(vectors) == dimension):
                wrong.append(
                    {"p": p, "rank": rank, "vectors": len(vectors), "dim": dimension}
                )
        name = f"row{q}.parameter_complement"
        message = (
            "x5, x10 complement u5^8 E(*,0) + u10^8 E(*,0) in E(*,8)"
            if extra
            else "E(*,10) = u5^8 E(*,2) + u10^8 E(*,2)"
        )
        if q > pipeline.qmax:
            section.info(name, f"q = {q} is outside of the window")
            continue
        section.check(name, not wrong, message, wrong or None)
        if skipped:
            section.info(f"{name}.skipped", f"columns {skipped} are not computable")


def _formal_rank(texts: Sequence[str], products: List[Element]) -> int:
    """
    Rank of the relations as vectors in the formal span of the products.
    """
    index = {next(iter(x.terms)): i for i, x in enumerate(products)}
    rows = []
    for text in texts:
        row = np.zeros(len(products), dtype=np.uint8)
        for monomial, coefficient in definitions.EINF_TABLE.parse(text).terms.items():
            row[index[monomial]] = coefficient
        rows.append(row)
    return linalg.rank(linalg.as_matrix(rows, len(products)))


def verify_corrected_relations(pipeline: SpectralPipeline) -> Section:
    section = Section("relations")
    einf = pipeline.einf
    for label, bidegree, relations, names in (
        ("34", (3, 4), definitions.EINF_RELATIONS_34, definitions.DELTA_NAMES),
        ("46", (4, 6), definitions.EINF_RELATIONS_46, definitions.TAU_NAMES),
    ):
        for index, text in enumerate(relations):
            section.check(
                f"{label}.{index}",
                einf.is_zero_class(definitions.einf(text), bidegree),
                f"{text} = 0",
            )
        products = [
            definitions.EINF_TABLE.parse(f"{x}*{y}")
            for x in definitions.A_NAMES
            for y in names
        ]
        dimension = einf.dimension(bidegree)
        rank = linalg.rank(
            linalg.as_matrix(
                [
                    einf.class_coords(definitions.lift_einf_to_e5(x), bidegree)
                    for x in products
                ],
                dimension,
            )
        )
        kernel = len(products) - rank
        formal = _formal_rank(relations, products)
        section.check(
            f"{label}.count",
            rank == dimension and kernel == len(relations) == formal,
            f"{len(products)} products span {rank} of {dimension} dimensions, "
            f"{kernel} dependencies, {formal} independent listed relations",
            {"span": rank, "kernel": kernel, "listed": formal},
        )
    return section


def last_survivor(pipeline: SpectralPipeline) -> Tuple[Optional[Element], Section]:
    """
    The unique nonzero F-stable class xi of E-infinity at (8,6).
    """
    section = Section("einf.survivor")
    context = pipeline.einf_mod
    bidegree = definitions.LAST_SURVIVOR_BIDEGREE
    if not context.is_computable(bidegree):
        section.check("dimension", False, f"{bidegree} is outside of the window")
        return None, section
    dimension = context.dimension(bidegree)
    if not section.check("dimension", dimension == 1, f"dim {bidegree} = {dimension}"):
        return None, section

    basis = context.class_basis(bidegree)[0]
    image = context.class_coords(frobenius_map(basis), bidegree)
    factor = Scalar16(int(image[0]))
    if not section.check("frobenius_eigenvalue", bool(factor), f"F(h) = {factor} h"):
        return None, section
    # F(c h) = c^2 mu h equals c h for c = 1 / mu
    xi = basis * inverse(factor)
    section.check(
        "frobenius_stable",
        context.same_class(frobenius_map(xi), xi, bidegree),
        "F(xi) = xi",
        str(xi),
    )
    section.check(
        "weight", weight_of(xi) in (0, ALL_WEIGHTS), f"weight {weight_of(xi)}"
    )
    for index, text in enumerate(definitions.LAST_SURVIVOR_ORBIT):
        section.check(
            f"representative.{index}",
            context.same_class(definitions.einf(text), xi, bidegree),
            f"{text} represents xi",
        )
    published = definitions.EINF_TABLE.parse(
        definitions.PUBLISHED_SURVIVOR_REPRESENTATIVE
    )
    e5_form = definitions.E5_TABLE.parse(definitions.SURVIVOR_E5_FORM)
    section.check(
        "e5_form",
        definitions.einf(definitions.LAST_SURVIVOR_ORBIT[1]) == e5_form,
        f"{definitions.LAST_SURVIVOR_ORBIT[1]} = {definitions.SURVIVOR_E5_FORM}",
    )
    section.info(
        "published_representative",
        f"{definitions.PUBLISHED_SURVIVOR_REPRESENTATIVE} has bidegree "
        f"{bidegree_of(published)}, the class at {bidegree} is represented by "
        f"{definitions.LAST_SURVIVOR_ORBIT[1]} = {definitions.SURVIVOR_E5_FORM}",
    )
    return xi, section


def _random_cell_element(
    space: PageSpace, bidegree: Bidegree, randomizer: random.Random
) -> Optional[Element]:
    """
    A random weight homogeneous element of the slice, or None if the slice is zero.
    """
    current = space.slice(bidegree)
    if not current.cells:
        return None
    cell = randomizer.choice(current.cells)
    terms = {
        cell.monomials[x]: randomizer.randrange(1, 16) for x in cell.basis_columns
    }
    return Element(space.table, terms)


def check_square_zero(pipeline: SpectralPipeline) -> Section:
    section = Section("properties.square_zero")
    for context, bidegrees in (
        (pipeline.h2, pipeline.e3_check_bidegrees()),
        (pipeline.h3, pipeline.bidegrees()),
        (pipeline.einf, pipeline.bidegrees()),
    ):
        wrong = [
            list(x)
            for x in bidegrees
            if context.is_computable(x) and not context.check_square_zero(x)
        ]
        section.check(
            context.derivation.name,
            not wrong,
            f"d o d = 0 on {context.space.name}",
            wrong or None,
        )
    return section


def check_equivariance(
    pipeline: SpectralPipeline, samples: int, seed: int = constants.DEFAULT_SEED
) -> Section:
    """
    d(F(x)) = F(d(x)) and weight(d(x)) = weight(x) on random weight homogeneous x.
    """
    section = Section("properties.derivations")
    randomizer = random.Random(seed)
    for space, derivation, bidegrees in (
        (pipeline.e2_space, definitions.d2(), pipeline.e2_space.bidegrees()),
        (pipeline.e3_space, definitions.d3(), pipeline.e3_space.bidegrees()),
        (pipeline.e5_space, definitions.d5(), pipeline.bidegrees()),
    ):
        candidates = [x for x in bidegrees if x[1] >= 1 and space.dimension(x)]
        equivariance_failures = []
        weight_failures = []
        for _ in range(samples):
            x = _random_cell_element(space, randomizer.choice(candidates), randomizer)
            if x is None:
                continue
            image = derivation.apply(x)
            if derivation.apply(frobenius_map(x)) != frobenius_map(image):
                equivariance_failures.append(str(x))
            if weight_of(image) not in (weight_of(x), ALL_WEIGHTS):
                weight_failures.append(str(x))
        section.check(
            f"{derivation.name}.equivariance",
            not equivariance_failures,
            f"d F = F d on {samples} samples",
            equivariance_failures[:5] or None,
        )
        section.check(
            f"{derivation.name}.weight",
            not weight_failures,
            f"d preserves the weight on {samples} samples",
            weight_failures[:5] or None,
        )
    return section


def check_norm_product_rule(
    pipeline: SpectralPipeline, samples: int, seed: int = constants.DEFAULT_SEED
) -> Section:
    """
    N(A) N(B) = N(A N(B)).
    """
    section = Section("properties.norm")
    randomizer = random.Random(seed)
    space = pipeline.e5_space
    small = [
        x for x in space.bidegrees() if x[0] <= 4 and x[1] <= 4 and space.dimension(x)
    ]
    failures = []
    for _ in range(samples):
        first = _random_cell_element(space, randomizer.choice(small), randomizer)
        second = _random_cell_element(space, randomizer.choice(small), randomizer)
        if first is None or second is None:
            continue
        if norm_N(first) * norm_N(second) != norm_N(first * norm_N(second)):
            failures.append([str(first), str(second)])
    section.check(
        "product_rule",
        not failures,
        f"N(A) N(B) = N(A N(B)) on {samples} samples",
        failures[:5] or None,
    )
    stable = [
        is_frobenius_stable(norm_N(x))
        for x in space.bidegree_basis((1, 0)) + space.bidegree_basis((2, 2))
    ]
    section.check("norm_is_stable", all(stable), "F(N(x)) = N(x)")
    return section


def check_presentations(pipeline: SpectralPipeline) -> Section:
    """
    The relations of every presentation are closed under F up to their span.
    """
    section = Section("properties.presentations")
    for space in (pipeline.e3_space, pipeline.e5_space):
        wrong = []
        for relation in space.presentation.relations:
            bidegree = bidegree_of(relation)
            assert bidegree
            if is_first_quadrant(bidegree) and space.in_window(bidegree):
                if not space.is_zero(frobenius_map(relation), bidegree):
                    wrong.append(str(relation))
        section.check(
            f"{space.name}.frobenius_closed",
            not wrong,
            f"F maps the relations of {space.name} into the relation ideal",
            wrong or None,
        )
    return section
