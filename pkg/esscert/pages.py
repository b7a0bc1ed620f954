# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

"""
Per bidegree linear algebra of finitely presented bigraded algebras.

A page is a Presentation (generators and relations) evaluated on a window of
bidegrees by a PageSpace. Every slice is split into weight cells: relations are
weight homogeneous and differentials preserve the weight, so all matrices are block
diagonal and each cell is reduced on its own.

Relations that are single monomials are not turned into matrix rows. They only prune
the monomial enumeration to standard monomials, and the other relations are
multiplied by standard monomials and reduced modulo the monomial ideal. The
resulting quotient is the same as the quotient by all relation multiples.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from esscert import linalg
from esscert.bigraded import (
    ALL_WEIGHTS,
    WEIGHT_MODULUS,
    Bidegree,
    Element,
    GeneratorTable,
    Monomial,
    Terms,
    add_bidegrees,
    bidegree_of,
    is_homogeneous,
    monomial_key,
    sub_bidegrees,
    weight_of,
)
from esscert.scalars import MUL_LIST
from esscert.util import (
    CheckFailedException,
    DomainException,
    NotACycleException,
    WindowException,
)
from esscert.util.logger import get_logger
from esscert.util.parallel import run_in_parallel
from esscert.util.perf_timer import create_timer


def is_first_quadrant(bidegree: Bidegree) -> bool:
    return bidegree[0] >= 0 and bidegree[1] >= 0


class Presentation:
    def __init__(
        self, name: str, table: GeneratorTable, relations: Sequence[Element]
    ) -> None:
        self.name = name
        self.table = table
        self.relations: List[Element] = []
        monomial_relations: List[Monomial] = []
        self.polynomial_relations: List[Tuple[Element, Bidegree, int]] = []
        for relation in relations:
            if relation.table is not table:
                raise DomainException(
                    f"[{name}] relation '{relation}' is not over {table.name}"
                )
            bidegree = bidegree_of(relation)
            if bidegree is None:
                raise DomainException(
                    f"[{name}] relation '{relation}' is zero or not bihomogeneous"
                )
            weight = weight_of(relation)
            if weight is None:
                raise DomainException(
                    f"[{name}] relation '{relation}' is not weight homogeneous"
                )
            self.relations.append(relation)
            if len(relation) == 1:
                monomial_relations.append(next(iter(relation.terms)))
            else:
                self.polynomial_relations.append((relation, bidegree, weight))

        # keep the minimal monomial generators only.
        self.monomial_relations: List[Monomial] = [
            x
            for x in monomial_relations
            if not any(y != x and _divides(y, x) for y in monomial_relations)
        ]
        # a monomial relation is checked when the enumeration sets its last exponent.
        self._checks_at: List[List[Monomial]] = [[] for _ in range(table.size)]
        for monomial in self.monomial_relations:
            last = max(i for i, x in enumerate(monomial) if x)
            self._checks_at[last].append(monomial)
        self._standard_cache: Dict[Bidegree, List[Monomial]] = {}

    def __repr__(self) -> str:
        return f"Presentation({self.name})"

    def is_standard(self, monomial: Monomial) -> bool:
        return not any(_divides(x, monomial) for x in self.monomial_relations)

    def standard_monomials(self, bidegree: Bidegree) -> List[Monomial]:
        """
        Monomials of the bidegree outside of the monomial ideal, unordered.
        """
        cached = self._standard_cache.get(bidegree)
        if cached is not None:
            return cached
        result: List[Monomial] = []
        if is_first_quadrant(bidegree):
            result = self._enumerate(bidegree)
        self._standard_cache[bidegree] = result
        return result

    def _enumerate(self, bidegree: Bidegree) -> List[Monomial]:
        table = self.table
        size = table.size
        # which of the remaining generators can still absorb p or q.
        has_p = [False] * (size + 1)
        has_q = [False] * (size + 1)
        for position in range(size - 1, -1, -1):
            gp, gq = table.bidegrees[position]
            has_p[position] = has_p[position + 1] or gp > 0
            has_q[position] = has_q[position + 1] or gq > 0

        results: List[Monomial] = []
        exponents = [0] * size

        def _visit(position: int, rest_p: int, rest_q: int) -> None:
            if position == size:
                if rest_p == 0 and rest_q == 0:
                    results.append(tuple(exponents))
                return
            if (rest_p and not has_p[position]) or (rest_q and not has_q[position]):
                return
            gp, gq = table.bidegrees[position]
            limits = []
            if gp:
                limits.append(rest_p // gp)
            if gq:
                limits.append(rest_q // gq)
            for exponent in range(min(limits) + 1):
                exponents[position] = exponent
                if exponent and any(
                    all(x >= y for x, y in zip(exponents, relation))
                    for relation in self._checks_at[position]
                ):
                    # larger exponents are divisible as well
                    break
                _visit(position + 1, rest_p - exponent * gp, rest_q - exponent * gq)
            exponents[position] = 0

        _visit(0, bidegree[0], bidegree[1])
        return results

    def reduce_product(self, relation: Element, monomial: Monomial) -> Terms:
        """
        relation * monomial modulo the monomial ideal.
        """
        terms: Terms = {}
        for term, coefficient in relation.terms.items():
            product = tuple(x + y for x, y in zip(term, monomial))
            if self.is_standard(product):
                terms[product] = terms.get(product, 0) ^ coefficient
        return {k: v for k, v in terms.items() if v}


def _divides(divisor: Monomial, monomial: Monomial) -> bool:
    return all(x <= y for x, y in zip(divisor, monomial))


class Cell:
    """
    The weight w part of a slice: standard monomials in graded lexicographic order
    (largest first), the reduced ideal rows over them, and the non pivot monomials as
    quotient basis.
    """

    def __init__(
        self,
        bidegree: Bidegree,
        weight: int,
        monomials: List[Monomial],
        relation_rows: List[np.ndarray],
    ) -> None:
        self.bidegree = bidegree
        self.weight = weight
        self.monomials = monomials
        self.index: Dict[Monomial, int] = {x: i for i, x in enumerate(monomials)}
        if relation_rows:
            self.ideal, self.pivots = linalg.row_reduce(np.array(relation_rows))
        else:
            self.ideal, self.pivots = linalg.zeros(0, len(monomials)), []
        pivot_set = set(self.pivots)
        self.basis_columns: List[int] = [
            x for x in range(len(monomials)) if x not in pivot_set
        ]
        self.dimension = len(self.basis_columns)

    def reduce_vector(self, vector: np.ndarray) -> np.ndarray:
        reduced = linalg.reduce(vector, self.ideal, self.pivots)
        return reduced[self.basis_columns]


@dataclass
class Slice:
    bidegree: Bidegree
    cells: List[Cell] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.offsets: Dict[int, int] = {}
        offset = 0
        for cell in self.cells:
            self.offsets[cell.weight] = offset
            offset += cell.dimension
        self.dimension = offset
        self._cells_by_weight = {x.weight: x for x in self.cells}

    def cell(self, weight: int) -> Optional[Cell]:
        return self._cells_by_weight.get(weight)

    def basis_monomials(self) -> List[Monomial]:
        return [
            cell.monomials[column]
            for cell in self.cells
            for column in cell.basis_columns
        ]

    def cell_range(self, weight: int) -> Tuple[int, int]:
        cell = self._cells_by_weight.get(weight)
        if cell is None:
            return 0, 0
        start = self.offsets[weight]
        return start, start + cell.dimension


class PageSpace:
    """
    A presentation evaluated on the window p <= pmax, q <= qmax. Slices are built on
    first use, or all at once by populate. Bidegrees outside the first quadrant are
    zero spaces, other bidegrees outside the window raise WindowException.
    """

    def __init__(
        self, presentation: Presentation, window: Bidegree, name: str = ""
    ) -> None:
        self.presentation = presentation
        self.table = presentation.table
        self.window = window
        self.name = name or presentation.name
        self._slices: Dict[Bidegree, Slice] = {}
        self._log = get_logger("pages", self.name)

    def __repr__(self) -> str:
        return f"PageSpace({self.name}, window={self.window})"

    def in_window(self, bidegree: Bidegree) -> bool:
        return bidegree[0] <= self.window[0] and bidegree[1] <= self.window[1]

    def bidegrees(self) -> List[Bidegree]:
        return [
            (p, q) for q in range(self.window[1] + 1) for p in range(self.window[0] + 1)
        ]

    def slice(self, bidegree: Bidegree) -> Slice:
        existing = self._slices.get(bidegree)
        if existing is not None:
            return existing
        if not is_first_quadrant(bidegree):
            return Slice(bidegree)
        if not self.in_window(bidegree):
            raise WindowException(
                f"[{self.name}] {bidegree} is outside of the window {self.window}"
            )
        built = self._build_slice(bidegree)
        self._slices[bidegree] = built
        return built

    def populate(self, concurrency: int = 1) -> None:
        timer = create_timer()
        pending = [x for x in self.bidegrees() if x not in self._slices]

        def _task(bidegree: Bidegree) -> Any:
            return lambda: (bidegree, self._build_slice(bidegree))

        def _store(result: Tuple[Bidegree, Slice]) -> None:
            self._slices[result[0]] = result[1]

        run_in_parallel([_task(x) for x in pending], _store, concurrency)
        self._log.debug(f"built {len(pending)} slices in {timer}")

    def _build_slice(self, bidegree: Bidegree) -> Slice:
        presentation = self.presentation
        table = self.table
        by_weight: Dict[int, List[Monomial]] = {}
        for monomial in presentation.standard_monomials(bidegree):
            by_weight.setdefault(table.monomial_weight(monomial), []).append(monomial)
        for monomials in by_weight.values():
            monomials.sort(key=monomial_key, reverse=True)
        indexes = {
            weight: {x: i for i, x in enumerate(monomials)}
            for weight, monomials in by_weight.items()
        }

        rows: Dict[int, List[np.ndarray]] = {}
        for relation, relation_bidegree, relation_weight in (
            presentation.polynomial_relations
        ):
            complement = sub_bidegrees(bidegree, relation_bidegree)
            if not is_first_quadrant(complement):
                continue
            for monomial in presentation.standard_monomials(complement):
                terms = presentation.reduce_product(relation, monomial)
                if not terms:
                    continue
                weight = (
                    relation_weight + table.monomial_weight(monomial)
                ) % WEIGHT_MODULUS
                index = indexes[weight]
                row = np.zeros(len(index), dtype=np.uint8)
                for term, coefficient in terms.items():
                    row[index[term]] = coefficient
                rows.setdefault(weight, []).append(row)

        cells = [
            Cell(bidegree, weight, by_weight[weight], rows.get(weight, []))
            for weight in sorted(by_weight)
        ]
        return Slice(bidegree, [x for x in cells if x.dimension])

    def dimension(self, bidegree: Bidegree) -> int:
        return self.slice(bidegree).dimension

    def bidegree_basis(self, bidegree: Bidegree) -> List[Element]:
        return [
            Element(self.table, {x: 1}) for x in self.slice(bidegree).basis_monomials()
        ]

    def coords(self, x: Element, bidegree: Bidegree) -> np.ndarray:
        """
        Coordinates of the coset of x in the basis of the slice. Monomials of the
        bidegree that are not in any cell lie in the monomial ideal.
        """
        current = self.slice(bidegree)
        result = np.zeros(current.dimension, dtype=np.uint8)
        if x.is_zero:
            return result
        if x.table is not self.table:
            raise DomainException(
                f"[{self.name}] '{x}' is over {x.table.name}, not {self.table.name}"
            )
        if not is_homogeneous(x, bidegree):
            raise DomainException(
                f"[{self.name}] '{x}' is not homogeneous of bidegree {bidegree}"
            )
        grouped: Dict[int, Terms] = {}
        for monomial, coefficient in x.terms.items():
            weight = self.table.monomial_weight(monomial)
            grouped.setdefault(weight, {})[monomial] = coefficient
        for weight, terms in grouped.items():
            cell = current.cell(weight)
            if cell is None:
                # every monomial of this weight is in the monomial ideal, or the
                # whole cell is spanned by relations.
                continue
            vector = np.zeros(len(cell.monomials), dtype=np.uint8)
            for monomial, coefficient in terms.items():
                position = cell.index.get(monomial)
                if position is not None:
                    vector[position] = coefficient
            start, end = current.cell_range(weight)
            result[start:end] = cell.reduce_vector(vector)
        return result

    def element(self, vector: np.ndarray, bidegree: Bidegree) -> Element:
        monomials = self.slice(bidegree).basis_monomials()
        return Element(
            self.table,
            {monomials[i]: int(x) for i, x in enumerate(vector.tolist()) if x},
        )

    def is_zero(self, x: Element, bidegree: Bidegree) -> bool:
        return not self.coords(x, bidegree).any()

    def dump(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "window": list(self.window),
            "generators": list(self.table.names),
            "relations": [str(x) for x in self.presentation.relations],
            "bases": {
                f"{p},{q}": [str(x) for x in self.bidegree_basis((p, q))]
                for p, q in self.bidegrees()
                if self.dimension((p, q))
            },
        }


def bidegree_basis(space: PageSpace, bidegree: Bidegree) -> List[Element]:
    return space.bidegree_basis(bidegree)


def coords(space: PageSpace, x: Element, bidegree: Bidegree) -> np.ndarray:
    return space.coords(x, bidegree)


class Derivation:
    """
    The derivation d_r of bidegree (r, 1 - r) that is given on generators and
    extended by the Leibniz rule. In characteristic 2, d(g^e) = e g^(e-1) d(g), so only
    odd exponents contribute.
    """

    def __init__(
        self,
        name: str,
        table: GeneratorTable,
        page: int,
        images: Mapping[str, Element],
    ) -> None:
        self.name = name
        self.table = table
        self.page = page
        self.shift: Bidegree = (page, 1 - page)
        self._images: List[Optional[Element]] = [None] * table.size
        for generator_name, image in images.items():
            position = table.index.get(generator_name)
            if position is None:
                raise DomainException(f"[{name}] unknown generator {generator_name}")
            if image.table is not table:
                raise DomainException(f"[{name}] image of {generator_name} is foreign")
            target = add_bidegrees(table.bidegrees[position], self.shift)
            if not is_homogeneous(image, target):
                raise DomainException(
                    f"[{name}] d({generator_name}) = '{image}' is not of bidegree "
                    f"{target}"
                )
            weight = weight_of(image)
            if weight not in (ALL_WEIGHTS, table.weights[position]):
                raise DomainException(
                    f"[{name}] d({generator_name}) = '{image}' doesn't have the "
                    f"weight {table.weights[position]}"
                )
            self._images[position] = image
        self._cache: Dict[Monomial, Terms] = {}

    def __repr__(self) -> str:
        return f"Derivation({self.name})"

    def image(self, generator_name: str) -> Element:
        image = self._images[self.table.index[generator_name]]
        return image if image is not None else self.table.zero()

    def apply_monomial(self, monomial: Monomial) -> Terms:
        cached = self._cache.get(monomial)
        if cached is not None:
            return cached
        terms: Terms = {}
        for position, exponent in enumerate(monomial):
            image = self._images[position]
            if exponent % 2 == 0 or image is None:
                continue
            for term, coefficient in image.terms.items():
                product = tuple(
                    x + y - (1 if i == position else 0)
                    for i, (x, y) in enumerate(zip(monomial, term))
                )
                terms[product] = terms.get(product, 0) ^ coefficient
        result = {k: v for k, v in terms.items() if v}
        self._cache[monomial] = result
        return result

    def apply(self, x: Element) -> Element:
        if x.table is not self.table:
            raise DomainException(f"[{self.name}] '{x}' is over {x.table.name}")
        terms: Terms = {}
        for monomial, coefficient in x.terms.items():
            row = MUL_LIST[coefficient]
            for term, value in self.apply_monomial(monomial).items():
                terms[term] = terms.get(term, 0) ^ row[value]
        return Element(self.table, terms)


def apply_derivation(derivation: Derivation, x: Element) -> Element:
    return derivation.apply(x)


@dataclass
class HomologyResult:
    bidegree: Bidegree
    dimension: int
    basis: List[Element]
    boundary_basis: List[Element]
    cycle_dimension: int
    boundary_dimension: int


@dataclass
class _Block:
    start: int
    end: int
    denominator: np.ndarray
    denominator_pivots: List[int]
    homology: np.ndarray
    homology_pivots: List[int]


@dataclass
class _BidegreeHomology:
    cycles: np.ndarray
    boundaries: np.ndarray
    blocks: List[_Block]
    dimension: int


class SubquotientContext:
    """
    Cycles of the outgoing differential modulo the boundaries of the incoming one,
    and optionally modulo the multiples of parameter cycles. Parameters must be
    cycles of one common bidegree.
    """

    def __init__(
        self,
        name: str,
        space: PageSpace,
        derivation: Derivation,
        parameters: Sequence[Element] = (),
    ) -> None:
        if derivation.table is not space.table:
            raise DomainException(f"[{name}] derivation and space use other tables")
        self.name = name
        self.space = space
        self.derivation = derivation
        self.shift = derivation.shift
        self.parameters = list(parameters)
        self.parameter_bidegree: Optional[Bidegree] = None
        for parameter in self.parameters:
            bidegree = bidegree_of(parameter)
            if bidegree is None or bidegree[0] < 0:
                raise DomainException(f"[{name}] invalid parameter '{parameter}'")
            if self.parameter_bidegree not in (None, bidegree):
                raise DomainException(f"[{name}] parameters differ in bidegree")
            self.parameter_bidegree = bidegree
            if not derivation.apply(parameter).is_zero:
                raise DomainException(f"[{name}] parameter '{parameter}' isn't a cycle")
        # a weight inhomogeneous parameter couples the weight cells.
        self._split_by_weight = all(
            weight_of(x) is not None for x in self.parameters
        )
        self._outgoing: Dict[Bidegree, Dict[int, np.ndarray]] = {}
        self._homology: Dict[Bidegree, _BidegreeHomology] = {}
        self._multiplication: Dict[Tuple[Element, Bidegree], np.ndarray] = {}
        self._log = get_logger("context", name)

    def __repr__(self) -> str:
        return f"SubquotientContext({self.name})"

    def target(self, bidegree: Bidegree) -> Bidegree:
        return add_bidegrees(bidegree, self.shift)

    def source(self, bidegree: Bidegree) -> Bidegree:
        return sub_bidegrees(bidegree, self.shift)

    def _needs(self, bidegree: Bidegree) -> List[Bidegree]:
        needed = [bidegree]
        for neighbour in (self.target(bidegree), self.source(bidegree)):
            if is_first_quadrant(neighbour):
                needed.append(neighbour)
        if self.parameter_bidegree is not None:
            shifted = sub_bidegrees(bidegree, self.parameter_bidegree)
            if is_first_quadrant(shifted):
                needed.append(shifted)
                target = self.target(shifted)
                if is_first_quadrant(target):
                    needed.append(target)
        return needed

    def is_computable(self, bidegree: Bidegree) -> bool:
        if not is_first_quadrant(bidegree):
            return True
        return all(self.space.in_window(x) for x in self._needs(bidegree))

    def differential_cells(self, bidegree: Bidegree) -> Dict[int, np.ndarray]:
        """
        Per weight, the matrix of d from the cell at bidegree to the cell of the same
        weight at the target. Row i is the image of basis vector i.
        """
        existing = self._outgoing.get(bidegree)
        if existing is not None:
            return existing
        current = self.space.slice(bidegree)
        target_bidegree = self.target(bidegree)
        target = self.space.slice(target_bidegree)
        matrices: Dict[int, np.ndarray] = {}
        for cell in current.cells:
            start, end = target.cell_range(cell.weight)
            rows = []
            for column in cell.basis_columns:
                monomial = cell.monomials[column]
                if end == start:
                    rows.append(np.zeros(0, dtype=np.uint8))
                    continue
                image = Element(
                    self.space.table, self.derivation.apply_monomial(monomial)
                )
                rows.append(self.space.coords(image, target_bidegree)[start:end])
            matrices[cell.weight] = (
                np.array(rows, dtype=np.uint8).reshape(len(rows), end - start)
            )
        self._outgoing[bidegree] = matrices
        return matrices

    def differential_matrix(self, bidegree: Bidegree) -> np.ndarray:
        """
        The block diagonal matrix of d out of bidegree, in slice coordinates.
        """
        current = self.space.slice(bidegree)
        target = self.space.slice(self.target(bidegree))
        matrix = linalg.zeros(current.dimension, target.dimension)
        for weight, cell_matrix in self.differential_cells(bidegree).items():
            row_start, row_end = current.cell_range(weight)
            column_start, column_end = target.cell_range(weight)
            matrix[row_start:row_end, column_start:column_end] = cell_matrix
        return matrix

    def check_square_zero(self, bidegree: Bidegree) -> bool:
        source = self.source(bidegree)
        if not is_first_quadrant(source):
            return True
        incoming = self.differential_cells(source)
        outgoing = self.differential_cells(bidegree)
        for weight, matrix in incoming.items():
            if weight not in outgoing or matrix.shape[0] == 0:
                continue
            if linalg.matmul(matrix, outgoing[weight]).any():
                return False
        return True

    def _cycles(self, bidegree: Bidegree) -> np.ndarray:
        current = self.space.slice(bidegree)
        rows = []
        for weight, matrix in self.differential_cells(bidegree).items():
            start, end = current.cell_range(weight)
            kernel = linalg.left_null_space(matrix)
            for row in kernel:
                full = np.zeros(current.dimension, dtype=np.uint8)
                full[start:end] = row
                rows.append(full)
        return linalg.as_matrix(rows, current.dimension)

    def _boundaries(self, bidegree: Bidegree) -> np.ndarray:
        current = self.space.slice(bidegree)
        source = self.source(bidegree)
        if not is_first_quadrant(source):
            return linalg.zeros(0, current.dimension)
        rows = []
        for weight, matrix in self.differential_cells(source).items():
            if matrix.shape[1] == 0:
                continue
            start, end = current.cell_range(weight)
            reduced, _ = linalg.row_reduce(matrix)
            for row in reduced:
                full = np.zeros(current.dimension, dtype=np.uint8)
                full[start:end] = row
                rows.append(full)
        return linalg.as_matrix(rows, current.dimension)

    def _parameter_multiples(self, bidegree: Bidegree) -> np.ndarray:
        current = self.space.slice(bidegree)
        if self.parameter_bidegree is None:
            return linalg.zeros(0, current.dimension)
        shifted = sub_bidegrees(bidegree, self.parameter_bidegree)
        if not is_first_quadrant(shifted):
            return linalg.zeros(0, current.dimension)
        rows = []
        for cycle in self._homology_of(shifted).cycles:
            lifted = self.space.element(cycle, shifted)
            for parameter in self.parameters:
                rows.append(self.space.coords(parameter * lifted, bidegree))
        return linalg.as_matrix(rows, current.dimension)

    def _homology_of(self, bidegree: Bidegree) -> _BidegreeHomology:
        existing = self._homology.get(bidegree)
        if existing is not None:
            return existing
        if not self.is_computable(bidegree):
            raise WindowException(
                f"[{self.name}] {bidegree} needs bidegrees outside of the window "
                f"{self.space.window}"
            )
        if not self.check_square_zero(bidegree):
            raise CheckFailedException(f"[{self.name}] d o d is not zero at {bidegree}")
        current = self.space.slice(bidegree)
        cycles = self._cycles(bidegree)
        boundaries = self._boundaries(bidegree)
        denominator_rows = np.concatenate(
            [boundaries, self._parameter_multiples(bidegree)], axis=0
        )
        if self._split_by_weight:
            ranges = [current.cell_range(x.weight) for x in current.cells]
        else:
            ranges = [(0, current.dimension)]
        blocks: List[_Block] = []
        dimension = 0
        for start, end in ranges:
            denominator, denominator_pivots = linalg.row_reduce(
                _rows_in(denominator_rows, start, end)
            )
            reduced_cycles = linalg.reduce_rows(
                _rows_in(cycles, start, end), denominator, denominator_pivots
            )
            homology, homology_pivots = linalg.row_reduce(reduced_cycles)
            blocks.append(
                _Block(
                    start=start,
                    end=end,
                    denominator=denominator,
                    denominator_pivots=denominator_pivots,
                    homology=homology,
                    homology_pivots=homology_pivots,
                )
            )
            dimension += len(homology_pivots)
        result = _BidegreeHomology(
            cycles=cycles, boundaries=boundaries, blocks=blocks, dimension=dimension
        )
        self._homology[bidegree] = result
        return result

    def dimension(self, bidegree: Bidegree) -> int:
        if not is_first_quadrant(bidegree):
            return 0
        return self._homology_of(bidegree).dimension

    def cycle_dimension(self, bidegree: Bidegree) -> int:
        if not is_first_quadrant(bidegree):
            return 0
        return int(self._homology_of(bidegree).cycles.shape[0])

    def cycle_basis(self, bidegree: Bidegree) -> List[Element]:
        if not is_first_quadrant(bidegree):
            return []
        return [
            self.space.element(x, bidegree)
            for x in self._homology_of(bidegree).cycles
        ]

    def homology(self, bidegree: Bidegree) -> HomologyResult:
        if not is_first_quadrant(bidegree):
            return HomologyResult(bidegree, 0, [], [], 0, 0)
        computed = self._homology_of(bidegree)
        return HomologyResult(
            bidegree=bidegree,
            dimension=computed.dimension,
            basis=self.class_basis(bidegree),
            boundary_basis=[
                self.space.element(x, bidegree) for x in computed.boundaries
            ],
            cycle_dimension=int(computed.cycles.shape[0]),
            boundary_dimension=int(computed.boundaries.shape[0]),
        )

    def class_basis_vectors(self, bidegree: Bidegree) -> np.ndarray:
        current = self.space.slice(bidegree)
        rows = []
        for block in self._homology_of(bidegree).blocks:
            for row in block.homology:
                full = np.zeros(current.dimension, dtype=np.uint8)
                full[block.start : block.end] = row  # noqa: E203
                rows.append(full)
        return linalg.as_matrix(rows, current.dimension)

    def class_basis(self, bidegree: Bidegree) -> List[Element]:
        """
        Cycle representatives of a basis of the subquotient.
        """
        if not is_first_quadrant(bidegree):
            return []
        return [
            self.space.element(x, bidegree)
            for x in self.class_basis_vectors(bidegree)
        ]

    def is_cycle(self, x: Element, bidegree: Bidegree) -> bool:
        return self.derivation.apply(x).is_zero or self.space.is_zero(
            self.derivation.apply(x), self.target(bidegree)
        )

    def class_coords(
        self, x: Element, bidegree: Bidegree, check_cycle: bool = True
    ) -> np.ndarray:
        """
        Coordinates of the class of x in the basis of class_basis. It's zero iff x is
        in the denominator.
        """
        if not is_first_quadrant(bidegree):
            return np.zeros(0, dtype=np.uint8)
        computed = self._homology_of(bidegree)
        vector = self.space.coords(x, bidegree)
        if check_cycle:
            outgoing = self.differential_matrix(bidegree)
            if outgoing.shape[1] and linalg.vecmat(vector, outgoing).any():
                raise NotACycleException(str(x), bidegree)
        parts = []
        for block in computed.blocks:
            part = linalg.reduce(
                vector[block.start : block.end],  # noqa: E203
                block.denominator,
                block.denominator_pivots,
            )
            parts.append(part[block.homology_pivots])
        if not parts:
            return np.zeros(0, dtype=np.uint8)
        return np.concatenate(parts).astype(np.uint8)

    def is_zero_class(self, x: Element, bidegree: Bidegree) -> bool:
        return not self.class_coords(x, bidegree).any()

    def same_class(self, x: Element, y: Element, bidegree: Bidegree) -> bool:
        return self.is_zero_class(x + y, bidegree)

    def class_element(self, vector: np.ndarray, bidegree: Bidegree) -> Element:
        basis = self.class_basis_vectors(bidegree)
        if basis.shape[0] == 0:
            return self.space.table.zero()
        return self.space.element(linalg.vecmat(vector, basis), bidegree)

    def multiplication_matrix(self, factor: Element, bidegree: Bidegree) -> np.ndarray:
        """
        Rows are the classes of factor * b at bidegree, for b running over the class
        basis one (1, 0) step lower. factor must be a cycle of bidegree (1, 0).
        """
        key = (factor, bidegree)
        existing = self._multiplication.get(key)
        if existing is not None:
            return existing
        lower = sub_bidegrees(bidegree, (1, 0))
        dimension = self.dimension(bidegree)
        rows = [
            self.class_coords(factor * x, bidegree, check_cycle=False)
            for x in self.class_basis(lower)
        ]
        matrix = linalg.as_matrix(rows, dimension)
        self._multiplication[key] = matrix
        return matrix

    def dump(self, bidegrees: Iterable[Bidegree]) -> Dict[str, Any]:
        result: Dict[str, Any] = {}
        for bidegree in bidegrees:
            if not self.is_computable(bidegree) or not self.space.dimension(bidegree):
                continue
            target = self.target(bidegree)
            if not is_first_quadrant(target):
                matrix: List[str] = []
            else:
                matrix = linalg.to_hex_rows(self.differential_matrix(bidegree))
            result[f"{bidegree[0]},{bidegree[1]}"] = {
                "dimension": self.dimension(bidegree),
                "differential": matrix,
                "classes": [str(x) for x in self.class_basis(bidegree)],
            }
        return {"name": self.name, "derivation": self.derivation.name, "slices": result}


def _rows_in(rows: np.ndarray, start: int, end: int) -> np.ndarray:
    """
    The columns start..end of the rows that are nonzero there.
    """
    part = rows[:, start:end]
    if part.shape[0] == 0:
        return part
    return part[part.any(axis=1)]


def homology(
    space: PageSpace, derivation: Derivation, bidegree: Bidegree
) -> HomologyResult:
    return SubquotientContext(
        f"{space.name}/{derivation.name}", space, derivation
    ).homology(bidegree)


def divides(
    context: SubquotientContext, divisor: Element, x: Element, bidegree: Bidegree
) -> Optional[Element]:
    """
    A witness w one (1, 0) step below bidegree with divisor * w = x in the
    subquotient, or None. The witness is multiplied back as a self check.
    """
    if bidegree_of(divisor) not in ((1, 0), None):
        raise DomainException(f"divisor '{divisor}' is not of bidegree (1, 0)")
    lower = sub_bidegrees(bidegree, (1, 0))
    target = context.class_coords(x, bidegree)
    if not target.any():
        return context.space.table.zero()
    if not is_first_quadrant(lower):
        return None
    matrix = context.multiplication_matrix(divisor, bidegree)
    if matrix.shape[0] == 0:
        return None
    solution = linalg.solve(matrix, target)
    if solution is None:
        return None
    witness = context.class_element(solution, lower)
    residual = context.class_coords(divisor * witness + x, bidegree, check_cycle=False)
    if residual.any():
        raise CheckFailedException(
            f"[{context.name}] witness '{witness}' doesn't multiply back to '{x}'"
        )
    return witness


def subquotient_reduce(
    context: SubquotientContext, x: Element, bidegree: Bidegree
) -> np.ndarray:
    return context.class_coords(x, bidegree)
