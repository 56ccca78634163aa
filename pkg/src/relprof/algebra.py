"""The graded age algebra: type bases, the subset-splitting product, the sum
of points, regularity and zero-divisor experiments, hereditary equivalences.

The degree-n component has one basis element per isomorphism type of
n-element restrictions.  The product of two types counts, on a
representative of each result type, the splittings of its domain into a
piece of the first type and a complement of the second; heredity of the
isomorphy equivalence makes the count representative-independent (tested,
not assumed).  All coefficients are exact rationals.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import nullspace, rank_bareiss, rank_mod_p
from .presentations import enumerate_age
from .profiles import age_of_finite
from .structures import RelStruct, canonical_code, restrict


class DegreeOverflowError(ValueError):
    """Raised when a product would leave the truncated basis window."""


@dataclass
class AgeBasis:
    """Type bases of degrees 0..max_degree, with representative structures."""

    source_name: str
    max_degree: int
    types: list = field(default_factory=list)  # per degree: list[(code, rep)]
    _index: dict = field(default_factory=dict)  # code -> (degree, position)
    _split_tables: dict = field(default_factory=dict)

    @classmethod
    def build(cls, source, max_degree: int, name: str = "") -> "AgeBasis":
        basis = cls(name or getattr(source, "name", "") or "age", max_degree)
        for n in range(max_degree + 1):
            if isinstance(source, RelStruct):
                if n > source.domain_size:
                    ages = {}
                else:
                    ages = age_of_finite(source, n)
            else:
                ages = enumerate_age(source, n)
            level = sorted(ages.items())
            basis.types.append(level)
            for pos, (code, _) in enumerate(level):
                basis._index[code] = (n, pos)
        return basis

    def dimension(self, degree: int) -> int:
        return len(self.types[degree])

    def codes(self, degree: int):
        return [code for code, _ in self.types[degree]]

    def representative(self, degree: int, pos: int) -> RelStruct:
        return self.types[degree][pos][1]

    def index_of(self, code: bytes):
        return self._index[code]

    def split_table(self, degree: int, part: int):
        """For each type of the degree: counts of (part-type, complement-type)
        over all part-sized subsets of a representative."""
        key = (degree, part)
        table = self._split_tables.get(key)
        if table is not None:
            return table
        table = []
        for code, rep in self.types[degree]:
            counts = Counter()
            domain = range(rep.domain_size)
            for subset in itertools.combinations(domain, part):
                left = canonical_code(restrict(rep, subset))
                complement = [v for v in domain if v not in set(subset)]
                right = canonical_code(restrict(rep, complement))
                counts[(left, right)] += 1
            table.append(counts)
        self._split_tables[key] = table
        return table


@dataclass(frozen=True)
class AlgebraElement:
    """Finitely supported rational combination of (degree, type position)."""

    coeffs: tuple  # tuple[((degree, pos), Fraction), ...] sorted, no zeros

    @classmethod
    def from_dict(cls, data) -> "AlgebraElement":
        items = tuple(
            sorted((k, Fraction(v)) for k, v in data.items() if Fraction(v) != 0)
        )
        return cls(items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self):
        return sorted({deg for (deg, _), _ in self.coeffs})

    def __add__(self, other):
        out = Counter()
        for k, v in self.coeffs:
            out[k] += v
        for k, v in other.coeffs:
            out[k] += v
        return AlgebraElement.from_dict(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "AlgebraElement":
        factor = Fraction(factor)
        return AlgebraElement.from_dict({k: v * factor for k, v in self.coeffs})


def type_element(basis: AgeBasis, code: bytes) -> AlgebraElement:
    return AlgebraElement.from_dict({basis.index_of(code): Fraction(1)})


def unit_element() -> AlgebraElement:
    return AlgebraElement.from_dict({(0, 0): Fraction(1)})


def e_element(basis: AgeBasis) -> AlgebraElement:
    """The sum of all degree-1 types with coefficient 1."""
    if basis.max_degree < 1:
        raise DegreeOverflowError("basis window has no degree 1")
    return AlgebraElement.from_dict(
        {(1, pos): Fraction(1) for pos in range(basis.dimension(1))}
    )


def structure_constants(basis: AgeBasis, sigma: bytes, tau: bytes) -> dict:
    """Counts of each product type in sigma * tau, as code -> integer."""
    deg_s, pos_s = basis.index_of(sigma)
    deg_t, pos_t = basis.index_of(tau)
    total = deg_s + deg_t
    if total > basis.max_degree:
        raise DegreeOverflowError(
            f"product degree {total} exceeds basis window {basis.max_degree}"
        )
    table = basis.split_table(total, deg_s)
    out = {}
    for pos_r, counts in enumerate(table):
        c = counts.get((sigma, tau), 0)
        if c:
            out[basis.codes(total)[pos_r]] = c
    return out


def multiply(basis: AgeBasis, left: AlgebraElement, right: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the subset-splitting product."""
    out = Counter()
    for (deg_l, pos_l), cl in left.coeffs:
        for (deg_r, pos_r), cr in right.coeffs:
            total = deg_l + deg_r
            if total > basis.max_degree:
                raise DegreeOverflowError(
                    f"product degree {total} exceeds basis window {basis.max_degree}"
                )
            table = basis.split_table(total, deg_l)
            sigma = basis.codes(deg_l)[pos_l]
            tau = basis.codes(deg_r)[pos_r]
            for pos, counts in enumerate(table):
                c = counts.get((sigma, tau), 0)
                if c:
                    out[(total, pos)] += cl * cr * c
    return AlgebraElement.from_dict(out)


def power(basis: AgeBasis, element: AlgebraElement, exponent: int) -> AlgebraElement:
    out = unit_element()
    for _ in range(exponent):
        out = multiply(basis, out, element)
    return out


# ---------------------------------------------------------------------------
# Multiplication-by-e and regularity
# ---------------------------------------------------------------------------


def e_matrix(basis: AgeBasis, degree: int):
    """Matrix of u -> e*u from degree to degree+1 (rows: targets)."""
    if degree + 1 > basis.max_degree:
        raise DegreeOverflowError("degree + 1 exceeds the basis window")
    cols = basis.codes(degree)
    col_index = {code: j for j, code in enumerate(cols)}
    rows = []
    for _, rep in basis.types[degree + 1]:
        row = [0] * len(cols)
        domain = range(rep.domain_size)
        for x in domain:
            rest = canonical_code(restrict(rep, [v for v in domain if v != x]))
            row[col_index[rest]] += 1
        rows.append(row)
    return rows


def e_rank(basis: AgeBasis, degree: int) -> int:
    """Exact rank of multiplication by e out of the given degree."""
    rows = e_matrix(basis, degree)
    if not rows or not rows[0]:
        return 0
    cols = len(rows[0])
    modular = rank_mod_p(rows)
    if modular == cols:
        return modular  # full column rank certified exactly
    return rank_bareiss(rows)


def check_e_regular(basis: AgeBasis, degree: int) -> bool:
    """Multiplication by e is injective out of the degree (trivial null space)."""
    return e_rank(basis, degree) == basis.dimension(degree)


# ---------------------------------------------------------------------------
# Zero-divisor search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroDivisorReport:
    witness: tuple | None  # (u, v) as AlgebraElements, or None
    pure_pairs_checked: int
    kernels_checked: int
    random_probes: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def _mult_matrix(basis: AgeBasis, element: AlgebraElement, degree_in: int):
    """Matrix of v -> element*v from degree_in, element homogeneous."""
    (out_deg,) = element.degrees()
    total = out_deg + degree_in
    cols = basis.codes(degree_in)
    rows = [[Fraction(0)] * len(cols) for _ in range(basis.dimension(total))]
    table = basis.split_table(total, out_deg)
    for (deg_l, pos_l), cl in element.coeffs:
        sigma = basis.codes(deg_l)[pos_l]
        for pos_r, counts in enumerate(table):
            for j, tau in enumerate(cols):
                c = counts.get((sigma, tau), 0)
                if c:
                    rows[pos_r][j] += cl * c
    return rows


def search_zero_divisors(basis: AgeBasis, max_total_degree: int, random_probes: int = 20,
                         seed: int = 0) -> ZeroDivisorReport:
    """Falsification search for homogeneous u, v != 0 with u*v = 0.

    Exhaustive over single-type u (its full multiplication kernel is solved
    exactly, covering every possible v of the complementary degree), plus
    seeded random small-support u probes, each again with an exact kernel.
    Homogeneous products live in one degree, so a zero inside the window is
    a genuine zero, not a truncation artifact.  Finding nothing is evidence,
    never a proof.
    """
    if max_total_degree > basis.max_degree:
        raise DegreeOverflowError("search degree exceeds the basis window")
    rng = random.Random(seed)
    pure = 0
    kernels = 0
    probes = 0
    witness = None
    for a in range(1, max_total_degree):
        for b in range(1, max_total_degree - a + 1):
            for pos_s in range(basis.dimension(a)):
                u = AlgebraElement.from_dict({(a, pos_s): Fraction(1)})
                matrix = _mult_matrix(basis, u, b)
                kernels += 1
                pure += basis.dimension(b)
                kernel = nullspace(matrix)
                if kernel:
                    v = AlgebraElement.from_dict(
                        {(b, j): c for j, c in enumerate(kernel[0]) if c}
                    )
                    return ZeroDivisorReport((u, v), pure, kernels, probes)
            for _ in range(random_probes):
                dim = basis.dimension(a)
                support = rng.sample(range(dim), k=min(dim, rng.randint(1, 3)))
                u = AlgebraElement.from_dict(
                    {(a, pos): Fraction(rng.choice([-3, -2, -1, 1, 2, 3])) for pos in support}
                )
                matrix = _mult_matrix(basis, u, b)
                probes += 1
                kernel = nullspace(matrix)
                if kernel:
                    v = AlgebraElement.from_dict(
                        {(b, j): c for j, c in enumerate(kernel[0]) if c}
                    )
                    return ZeroDivisorReport((u, v), pure, kernels, probes)
    return ZeroDivisorReport(witness, pure, kernels, probes)


# ---------------------------------------------------------------------------
# Hereditary equivalences
# ---------------------------------------------------------------------------


def is_hereditary(m: int, classes) -> bool:
    """Check the two conditions for an equivalence on the subsets of {0..m-1}:
    equivalent sets share a cardinality, and count each class equally often
    among their own subsets."""
    if m > 5:
        raise ValueError("exhaustive heredity check limited to m <= 5")
    classes = [frozenset(map(frozenset, cls)) for cls in classes]
    class_of = {}
    for ci, cls in enumerate(classes):
        for subset in cls:
            if subset in class_of:
                raise ValueError(f"{set(subset)} appears in two classes")
            class_of[subset] = ci
    universe = [
        frozenset(c) for r in range(m + 1) for c in itertools.combinations(range(m), r)
    ]
    if set(class_of) != set(universe):
        raise ValueError("classes must partition all subsets of the domain")
    for cls in classes:
        if len({len(subset) for subset in cls}) > 1:
            return False
    for cls in classes:
        members = sorted(cls, key=sorted)
        baseline = None
        for d in members:
            counts = Counter()
            for r in range(len(d) + 1):
                for sub in itertools.combinations(sorted(d), r):
                    counts[class_of[frozenset(sub)]] += 1
            if baseline is None:
                baseline = counts
            elif counts != baseline:
                return False
    return True


def isomorphy_partition(struct: RelStruct):
    """The partition of all subsets of the domain by restriction type."""
    groups = {}
    for r in range(struct.domain_size + 1):
        for combo in itertools.combinations(range(struct.domain_size), r):
            code = canonical_code(restrict(struct, combo))
            groups.setdefault(code, []).append(frozenset(combo))
    return list(groups.values())


def cardinality_partition(m: int):
    return [
        [frozenset(c) for c in itertools.combinations(range(m), r)]
        for r in range(m + 1)
    ]
