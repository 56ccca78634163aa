import pytest

from relprof.presentations import (
    ACYCLIC,
    CLIQUE,
    OMEGA,
    LexSumPresentation,
    Word,
    colored_dense_chain,
    enumerate_age,
    half_complete_bipartite,
    interval_division_chain,
    lexsum_tournament_fixture,
    product_of,
    realize,
    realize_composition,
    reflexive_chain,
    slow_profile_structure,
    sum_of_cliques,
    tournament_fixtures,
    words_of_size,
)
from relprof.structures import (
    acyclic_tournament,
    are_isomorphic,
    are_isomorphic_brute_force,
    canonical_code,
    cyclic_tournament_3,
    digraph,
    graph_from_edges,
    make_struct,
    restrict,
)


def test_word_validation():
    with pytest.raises(ValueError):
        Word((), (frozenset(),))
    w = Word((0,), (frozenset({1}), frozenset({0, 2})))
    assert w.total_size == 4


def test_realize_omega_word_is_transitive_tournament():
    omega = tournament_fixtures("omega")
    w = Word((), (frozenset({0}),) * 3)
    assert are_isomorphic(realize(omega, w), acyclic_tournament(3))


def test_realize_half_bipartite_orientation():
    kc = half_complete_bipartite()
    one_edge = realize(kc, Word((), (frozenset({0}), frozenset({1}))))
    assert are_isomorphic(one_edge, graph_from_edges(2, [(0, 1)]))
    no_edge = realize(kc, Word((), (frozenset({1}), frozenset({0}))))
    assert are_isomorphic(no_edge, graph_from_edges(2, []))


def test_realize_c3_letter_is_cycle():
    pres = tournament_fixtures("C3omega")
    cyc = realize(pres, Word((), (frozenset({0, 1, 2}),)))
    assert are_isomorphic(cyc, cyclic_tournament_3())


def test_realize_rejects_bad_words():
    omega = tournament_fixtures("omega")
    with pytest.raises(ValueError):
        realize(omega, Word((0,), ()))  # no finite part in omega
    with pytest.raises(ValueError):
        realize(omega, Word((), (frozenset({3}),)))


def test_enumerate_age_empty_size():
    for pres in (tournament_fixtures("T2"), sum_of_cliques(2)):
        ages = enumerate_age(pres, 0)
        assert len(ages) == 1
        (rep,) = ages.values()
        assert rep.domain_size == 0


def test_two_cliques_age_sizes():
    pres = sum_of_cliques(2)
    assert len(enumerate_age(pres, 5)) == 3  # pairs of clique sizes: 5, 4+1, 3+2


def test_colored_chain_age_is_k_pow_n():
    for k in (1, 2, 3):
        pres = colored_dense_chain(k)
        for n in range(5):
            assert len(enumerate_age(pres, n)) == k ** n


def test_word_dedup_agrees_with_pairwise_isomorphism():
    fixtures = [
        tournament_fixtures("omega"),
        tournament_fixtures("T1"),
        tournament_fixtures("T2"),
        tournament_fixtures("C3omega"),
        half_complete_bipartite(),
        colored_dense_chain(2),
    ]
    for pres in fixtures:
        for n in range(5):
            reps = []
            for w in words_of_size(pres, n):
                s = realize(pres, w)
                if not any(are_isomorphic_brute_force(s, r) for r in reps):
                    reps.append(s)
            assert len(enumerate_age(pres, n)) == len(reps), (pres.name, n)


def test_lexsum_block_subsets_are_monomorphic():
    # inside one block, equal-size choices (others fixed) give isomorphic
    # restrictions: the defining property of a monomorphic decomposition
    import itertools

    fixtures = [
        sum_of_cliques(2),
        lexsum_tournament_fixture("T2"),
        lexsum_tournament_fixture("T3"),
    ]
    for pres in fixtures:
        counts = tuple(4 if size is OMEGA else size for (_, size) in pres.blocks)
        full = realize_composition(pres, counts)
        offsets = [sum(counts[:i]) for i in range(len(counts))]
        for bi, c in enumerate(counts):
            block = list(range(offsets[bi], offsets[bi] + c))
            outside = [v for v in range(full.domain_size) if v not in block]
            fixed = outside[::2]
            for k in range(1, c + 1):
                codes = {
                    canonical_code(restrict(full, fixed + list(inner)))
                    for inner in itertools.combinations(block, k)
                }
                assert len(codes) == 1, (pres.name, bi, k)


def test_tournament_fixture_t3_equals_lexsum_form():
    multi = tournament_fixtures("T3")
    lex = lexsum_tournament_fixture("T3")
    for n in range(6):
        assert set(enumerate_age(multi, n)) == set(enumerate_age(lex, n))


def test_tournament_fixture_t1_t2_match_lexsum():
    for name in ("omega", "T1", "T2"):
        multi = tournament_fixtures(name)
        lex = lexsum_tournament_fixture(name)
        for n in range(6):
            assert set(enumerate_age(multi, n)) == set(enumerate_age(lex, n)), (name, n)


def test_unknown_fixture_rejected():
    with pytest.raises(ValueError):
        tournament_fixtures("T4")


def test_interval_chain_binomial_profile():
    import math

    for k in (0, 1, 2, 3):
        pres = interval_division_chain(k)
        for n in range(6):
            assert len(enumerate_age(pres, n)) == math.comb(n + k, k), (k, n)


def test_two_linear_orders_factorial_window():
    from relprof.profiles import profile_finite
    from relprof.structures import two_linear_orders

    # 2 5 3 1 4 contains every pattern of size <= 3, so the profile hits n!
    universal = two_linear_orders((1, 4, 2, 0, 3))
    for n in range(4):
        assert profile_finite(universal, n) == math_factorial(n)
    # identity permutation: both orders agree, profile collapses to 1
    identity = two_linear_orders((0, 1, 2, 3))
    assert profile_finite(identity, 3) == 1


def math_factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_product_of_three_chain_profile_four():
    # compositions of 4 into at most 3 parts
    pres = product_of(reflexive_chain(3))
    assert len(enumerate_age(pres, 4)) == 7


def test_product_of_point_is_monomorphic():
    bare = product_of(make_struct((2,), 1, [set()]))
    looped = product_of(reflexive_chain(1))
    for n in range(5):
        assert len(enumerate_age(bare, n)) == 1
        assert len(enumerate_age(looped, n)) == 1


def test_product_of_single_position_recovers_age():
    # restricting the product to one chain position (single-letter words)
    # realizes exactly the age of the base structure, up to its size
    import itertools

    from relprof.profiles import age_of_finite

    s = digraph(3, [(0, 1), (1, 2), (0, 2)])
    pres = product_of(s)
    for n in range(4):
        codes = set()
        for letter in itertools.combinations(range(3), n):
            if n == 0:
                codes.add(canonical_code(realize(pres, Word((), ()))))
            else:
                codes.add(canonical_code(realize(pres, Word((), (frozenset(letter),)))))
        assert codes == set(age_of_finite(s, n))


def test_lexsum_validation():
    with pytest.raises(ValueError):
        LexSumPresentation(digraph(1, []), ())
    with pytest.raises(ValueError):
        LexSumPresentation(digraph(1, []), (("hexagon", OMEGA),))
    with pytest.raises(ValueError):
        LexSumPresentation(digraph(2, []), ((ACYCLIC, OMEGA),))
    with pytest.raises(ValueError):
        LexSumPresentation(digraph(1, []), ((CLIQUE, 0),))


def test_slow_profile_structure_shapes():
    # f identically 1: empty signature
    s = slow_profile_structure([1] * 11, 10)
    assert s.signature.arities == ()
    # f(n) = min(n+1, 3): unary marking 0 and binary marking {0,1}
    f = [min(n + 1, 3) for n in range(11)]
    s = slow_profile_structure(f, 10)
    assert s.signature.arities == (1, 2)
    assert s.relations[0] == frozenset({(0,)})
    assert s.relations[1] == frozenset({(0, 1), (1, 0)})
    # f(n) = n+1: one symbol per level
    s = slow_profile_structure(list(range(1, 7)), 5)
    assert s.signature.arities == (1, 2, 3, 4, 5)


def test_slow_profile_structure_validation():
    with pytest.raises(ValueError):
        slow_profile_structure([2, 2, 2], 2)  # f(0) > 1
    with pytest.raises(ValueError):
        slow_profile_structure([1, 2, 1], 2)  # decreasing


def test_enumerate_age_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_age(sum_of_cliques(2), -1)


def test_realize_composition_cross_arcs():
    pres = lexsum_tournament_fixture("T2")
    r = realize_composition(pres, (1, 1, 1))
    assert are_isomorphic(r, cyclic_tournament_3())
