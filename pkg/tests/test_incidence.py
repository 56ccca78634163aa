import random
from fractions import Fraction

import pytest

from relprof.incidence import (
    build_incidence,
    colex_subsets,
    dump_matrix,
    matrix_rank,
    matrix_rank_alt,
    profile_inequality_via_incidence,
    type_indicator_matrix,
    verify_kantor,
)
from relprof.linalg import nullspace, rank_bareiss, rank_exact, rank_mod_p
from relprof.structures import graph_from_edges, path_graph


def test_colex_order():
    assert colex_subsets(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_build_incidence_shapes():
    m = build_incidence(2, 1, 1)
    assert m.shape == (2, 1)
    assert m.entries == ((1,), (1,))
    assert build_incidence(5, 2, 1).shape == (10, 10)
    row = build_incidence(4, 0, 2)
    assert row.shape == (1, 6)
    assert all(x == 1 for x in row.entries[0])


def test_build_incidence_validation():
    with pytest.raises(ValueError):
        build_incidence(3, 2, 2)


def test_rank_small_matrices():
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rank_exact(identity) == 3
    assert rank_exact([[1, 1], [1, 1]]) == 1
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([]) == 0


def test_rank_fraction_entries():
    singular = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
    assert rank_exact(singular) == 1
    regular = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 3), Fraction(1, 2)]]
    assert rank_exact(regular) == 2


def rank_fraction_oracle(mat):
    a = [[Fraction(x) for x in row] for row in mat]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pv = a[rank][col]
        a[rank] = [x / pv for x in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def test_rank_two_elimination_orders_agree():
    rng = random.Random(3)
    for _ in range(200):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = [
            [rng.randint(-4, 4) if rng.random() > 0.25 else 0 for _ in range(cols)]
            for _ in range(rows)
        ]
        if rows > 1 and rng.random() < 0.3:
            m[rng.randrange(rows)] = list(m[rng.randrange(rows)])  # force singularity
        want = rank_fraction_oracle(m)
        assert (
            rank_bareiss(m)
            == rank_bareiss(m, pivot_by_magnitude=False)
            == rank_exact(m)
            == want
        ), m


def test_nullspace_vectors_annihilate():
    rng = random.Random(9)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 6)
        m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        basis = nullspace(m)
        assert len(basis) == cols - rank_fraction_oracle(m)
        for v in basis:
            assert all(
                sum(Fraction(m[r][c]) * v[c] for c in range(cols)) == 0
                for r in range(rows)
            )


def test_modular_rank_is_lower_bound():
    rng = random.Random(5)
    for _ in range(40):
        m = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
        assert rank_mod_p(m) <= rank_bareiss(m)


def test_nullspace_basis():
    basis = nullspace([[1, 1, 0], [0, 0, 1]])
    assert len(basis) == 1
    (v,) = basis
    assert v[0] + v[1] == 0 and v[2] == 0 and any(v)
    assert nullspace([[1, 0], [0, 1]]) == []


def test_kantor_small_cases():
    assert verify_kantor(5, 2, 1)
    assert verify_kantor(3, 1, 1)
    assert matrix_rank(build_incidence(5, 2, 1)) == 10
    assert matrix_rank(build_incidence(3, 1, 1)) == 3


def test_kantor_hypothesis_unmet():
    with pytest.raises(ValueError):
        verify_kantor(2, 1, 1)
    # outside the hypothesis the rank genuinely drops
    assert matrix_rank(build_incidence(2, 1, 1)) == 1


def test_kantor_medium_sweep():
    for m in range(9):
        for n in range(m // 2 + 1):
            for k in range(m - 2 * n + 1):
                assert verify_kantor(m, n, k), (m, n, k)


def test_incidence_rank_alt_agrees():
    for (m, n, k) in [(5, 2, 1), (6, 2, 2), (7, 3, 1)]:
        mat = build_incidence(m, n, k)
        assert matrix_rank(mat) == matrix_rank_alt(mat)


def test_dump_format():
    mat = build_incidence(3, 1, 1)
    text = dump_matrix(mat, 3, 1, 1)
    lines = text.strip().splitlines()
    assert lines[0] == "3 1 1 3 3"
    assert len(lines) == 4
    assert all(set(line.split()) <= {"0", "1"} for line in lines[1:])


def test_type_indicator_full_row_rank():
    g = path_graph(6)
    t = type_indicator_matrix(g, 2)
    # indicator rows have disjoint supports, hence independent
    assert matrix_rank(t) == t.shape[0]
    assert sum(sum(r) for r in t.entries) == 15  # every 2-subset hits one type


def test_profile_inequality_via_incidence_cases():
    assert profile_inequality_via_incidence(path_graph(6), 2, 2)
    assert profile_inequality_via_incidence(path_graph(7), 0, 3)
    rng = random.Random(11)
    for _ in range(5):
        edges = [(i, j) for i in range(7) for j in range(i + 1, 7) if rng.random() < 0.5]
        g = graph_from_edges(7, edges)
        assert profile_inequality_via_incidence(g, 2, 1)


def test_profile_inequality_hypothesis():
    with pytest.raises(ValueError):
        profile_inequality_via_incidence(path_graph(4), 2, 1)


def test_incidence_proof_agrees_with_direct_inequality():
    from relprof.profiles import check_linalg_inequality
    from relprof.structures import clique_graph, disjoint_union, independent_graph

    structs = [
        path_graph(7),
        clique_graph(7),
        disjoint_union(clique_graph(3), independent_graph(4)),
    ]
    for s in structs:
        for n in range(4):
            for k in range(8 - 2 * n):
                if 2 * n + k <= 7 and n + k <= 7:
                    assert profile_inequality_via_incidence(s, n, k)
                    assert check_linalg_inequality(s, n, k)
