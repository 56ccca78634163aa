"""Subset-inclusion incidence matrices and exact rank verification.

M(n, n+k) over an m-set has rows indexed by the n-element subsets and
columns by the (n+k)-element subsets, entry 1 exactly at inclusions.  When
2n+k <= m the matrix has full row rank over the rationals, which is what
forces profiles to satisfy phi(n) <= phi(n+k) on large enough domains; both
the rank fact and the profile argument are reproduced computationally here.
Subsets are indexed colexicographically for reproducible dumps.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .linalg import rank_bareiss, rank_exact, rank_mod_p
from .profiles import age_of_finite
from .structures import RelStruct, canonical_code, restrict


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple  # tuple of row tuples, exact integers/Fractions
    row_labels: tuple
    col_labels: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.row_labels):
            raise ValueError("row labels inconsistent")
        if self.entries and any(len(r) != len(self.col_labels) for r in self.entries):
            raise ValueError("column labels inconsistent")

    @property
    def shape(self):
        return (len(self.row_labels), len(self.col_labels))


def colex_subsets(m: int, size: int):
    """All size-subsets of {0..m-1} in colexicographic order."""
    subsets = [tuple(sorted(s)) for s in itertools.combinations(range(m), size)]
    subsets.sort(key=lambda s: tuple(reversed(s)))
    return subsets


def build_incidence(m: int, n: int, k: int) -> ExactMatrix:
    """The 0/1 inclusion matrix between n-subsets and (n+k)-subsets of {0..m-1}."""
    if n < 0 or k < 0 or n + k > m:
        raise ValueError(f"need 0 <= n, 0 <= k, n+k <= m; got m={m} n={n} k={k}")
    rows = colex_subsets(m, n)
    cols = colex_subsets(m, n + k)
    col_sets = [frozenset(c) for c in cols]
    entries = tuple(
        tuple(1 if col >= frozenset(row) else 0 for col in col_sets) for row in rows
    )
    return ExactMatrix(entries, tuple(rows), tuple(cols))


def matrix_rank(matrix: ExactMatrix) -> int:
    """Exact rank over the rationals."""
    return rank_exact(matrix.entries)


def matrix_rank_alt(matrix: ExactMatrix) -> int:
    """Second elimination order (first-nonzero pivoting), exact; for cross checks."""
    return rank_bareiss(matrix.entries, pivot_by_magnitude=False)


def verify_kantor(m: int, n: int, k: int) -> bool:
    """Full row rank of the inclusion matrix under the hypothesis 2n+k <= m."""
    if 2 * n + k > m:
        raise ValueError(f"hypothesis 2n+k <= m unmet: 2*{n}+{k} > {m}")
    matrix = build_incidence(m, n, k)
    rows = len(matrix.row_labels)
    # modular full row rank already certifies rational full row rank
    if rank_mod_p(matrix.entries) == rows:
        return True
    return rank_exact(matrix.entries) == rows


def dump_matrix(matrix: ExactMatrix, m: int, n: int, k: int) -> str:
    lines = [f"{m} {n} {k} {len(matrix.row_labels)} {len(matrix.col_labels)}"]
    for row in matrix.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def type_indicator_matrix(struct: RelStruct, n: int) -> ExactMatrix:
    """Rows: types of n-restrictions; columns: n-subsets (colex); entry 1 at matches."""
    types = list(age_of_finite(struct, n))
    index = {code: i for i, code in enumerate(types)}
    cols = colex_subsets(struct.domain_size, n)
    entries = [[0] * len(cols) for _ in types]
    for j, subset in enumerate(cols):
        code = canonical_code(restrict(struct, subset))
        entries[index[code]][j] = 1
    return ExactMatrix(tuple(map(tuple, entries)), tuple(types), tuple(cols))


def profile_inequality_via_incidence(struct: RelStruct, n: int, k: int) -> bool:
    """Replay the incidence-matrix proof that phi(n) <= phi(n+k).

    Multiplies the type-by-subset indicator with the inclusion matrix; the
    product must keep full row rank phi(n), and distinct independent columns
    belong to distinct (n+k)-types, giving the inequality.  Returns True only
    when both the rank argument and the direct profile comparison hold.
    """
    m = struct.domain_size
    if m < 2 * n + k:
        raise ValueError(f"need domain size >= {2 * n + k}, got {m}")
    indicator = type_indicator_matrix(struct, n)
    inclusion = build_incidence(m, n, k)
    product = [
        [
            sum(a * b for a, b in zip(row, col))
            for col in zip(*inclusion.entries)
        ]
        for row in indicator.entries
    ]
    phi_n = len(indicator.row_labels)
    if rank_exact(product) != phi_n:
        return False
    phi_nk = len(age_of_finite(struct, n + k))
    return phi_n <= phi_nk


def kantor_sweep(max_m: int):
    """All (m, n, k) with 2n+k <= m, m <= max_m, and their verification."""
    results = []
    for m in range(max_m + 1):
        for n in range(m // 2 + 1):
            for k in range(m - 2 * n + 1):
                results.append(((m, n, k), verify_kantor(m, n, k)))
    return results


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)
