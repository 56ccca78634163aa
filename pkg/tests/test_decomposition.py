import itertools

import pytest

from relprof.decomposition import (
    AddLayerReport,
    Decomposition,
    Monomial,
    canonical_decomposition,
    is_monomorphic_part,
    is_monomorphic_part_oracle,
    largest_monomorphic_part,
    leading_monomial,
    leading_monomials,
    monomial_greater,
    predict_growth_degree,
    presentation_decomposition,
    verify_addlayer,
)
from relprof.presentations import (
    ACYCLIC,
    CLIQUE,
    OMEGA,
    LexSumPresentation,
    enumerate_age,
    lexsum_tournament_fixture,
    sum_of_cliques,
)
from relprof.structures import (
    acyclic_tournament,
    canonical_code,
    clique_graph,
    cyclic_tournament_3,
    digraph,
    disjoint_union,
    independent_graph,
    path_graph,
)


def all_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partition in all_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [partition[i] + [first]] + partition[i + 1:]
        yield partition + [[first]]


def test_monomorphic_part_trivial():
    p = path_graph(4)
    assert is_monomorphic_part(p, set())
    assert is_monomorphic_part(p, {2})


def test_monomorphic_part_path_pairs():
    # in the 3-path the endpoint pair is a part; in the 4-path no 2-subset is
    # (e.g. swapping 0 for 3 next to vertex 1 turns an edge into a non-edge)
    assert is_monomorphic_part(path_graph(3), {0, 2})
    p = path_graph(4)
    assert not is_monomorphic_part(p, {0, 3})
    assert not is_monomorphic_part(p, {0, 1})


def test_swap_test_matches_full_oracle():
    structs = [
        path_graph(4),
        clique_graph(4),
        cyclic_tournament_3(),
        disjoint_union(clique_graph(2), independent_graph(2)),
        acyclic_tournament(4),
    ]
    for s in structs:
        vertices = range(s.domain_size)
        for r in range(s.domain_size + 1):
            for block in itertools.combinations(vertices, r):
                assert is_monomorphic_part(s, block) == is_monomorphic_part_oracle(
                    s, block
                ), (s, block)


def test_subset_closure_of_parts():
    structs = [
        path_graph(5),
        disjoint_union(clique_graph(3), independent_graph(3)),
        acyclic_tournament(5),
    ]
    for s in structs:
        for r in range(s.domain_size + 1):
            for block in itertools.combinations(range(s.domain_size), r):
                if is_monomorphic_part(s, block):
                    for sub in itertools.combinations(block, max(r - 1, 0)):
                        assert is_monomorphic_part(s, sub)


def test_largest_part_acyclic_tournament():
    t = acyclic_tournament(4)
    for x in range(4):
        assert largest_monomorphic_part(t, x) == frozenset(range(4))


def test_largest_part_three_cycle():
    c = cyclic_tournament_3()
    for x in range(3):
        assert largest_monomorphic_part(c, x) == frozenset(range(3))


def test_largest_part_clique_plus_independent():
    g = disjoint_union(clique_graph(3), independent_graph(3))
    assert largest_monomorphic_part(g, 0) == frozenset({0, 1, 2})
    assert largest_monomorphic_part(g, 4) == frozenset({3, 4, 5})


def test_canonical_decomposition_clique():
    d = canonical_decomposition(clique_graph(4))
    assert len(d.blocks) == 1


def test_canonical_decomposition_two_block_graph():
    d = canonical_decomposition(disjoint_union(clique_graph(6), independent_graph(6)))
    assert len(d.blocks) == 2
    assert {members for members, _ in d.blocks} == {
        tuple(range(6)),
        tuple(range(6, 12)),
    }


def test_canonical_decomposition_path_is_discrete():
    d = canonical_decomposition(path_graph(6))
    assert len(d.blocks) == 6
    assert all(size == 1 for _, size in d.blocks)


def test_every_blockwise_partition_refines_canonical():
    structs = [
        path_graph(5),
        clique_graph(5),
        disjoint_union(clique_graph(3), independent_graph(3)),
        acyclic_tournament(6),
        cyclic_tournament_3(),
    ]
    for s in structs:
        coarse = canonical_decomposition(s)
        coarse_of = {}
        for members, _ in coarse.blocks:
            for v in members:
                coarse_of[v] = members
        for partition in all_partitions(list(range(s.domain_size))):
            if all(is_monomorphic_part(s, block) for block in partition):
                for block in partition:
                    targets = {coarse_of[v] for v in block}
                    assert len(targets) == 1, (s, partition, block)


def test_presentation_decomposition_fixtures():
    t3 = presentation_decomposition(lexsum_tournament_fixture("T3"))
    assert [size for _, size in t3.blocks] == [OMEGA, OMEGA, OMEGA]

    t2 = presentation_decomposition(lexsum_tournament_fixture("T2"))
    assert sorted((len(g), size is OMEGA) for g, size in t2.blocks) == [
        (1, False),
        (1, True),
        (1, True),
    ]

    two = presentation_decomposition(sum_of_cliques(2))
    assert [size for _, size in two.blocks] == [OMEGA, OMEGA]


def test_presentation_decomposition_merges_fused_singletons():
    # one vertex of the 3-cycle blown up: the two finite vertices fuse into a
    # single 2-element monomorphic block of the presented tournament
    t1 = presentation_decomposition(lexsum_tournament_fixture("T1"))
    assert sorted((g, size) for g, size in t1.blocks) == [((0,), OMEGA), ((1, 2), 2)]


def test_presentation_decomposition_merges_chained_omegas():
    # omega followed by omega with all arcs forward is again omega
    pres = LexSumPresentation(
        digraph(2, [(0, 1)]), ((ACYCLIC, OMEGA), (ACYCLIC, OMEGA)), name="omega+omega"
    )
    d = presentation_decomposition(pres)
    assert len(d.blocks) == 1
    assert d.blocks[0] == ((0, 1), OMEGA)


def test_presentation_decomposition_agrees_with_truncations():
    for name in ("T1", "T2", "T3"):
        pres = lexsum_tournament_fixture(name)
        decomp = presentation_decomposition(pres, window=3)
        wide = presentation_decomposition(pres, window=5)
        assert [sorted(g) for g, _ in decomp.blocks] == [sorted(g) for g, _ in wide.blocks]


def test_predict_growth_degree():
    assert predict_growth_degree(presentation_decomposition(lexsum_tournament_fixture("T3"))) == 2
    assert predict_growth_degree(presentation_decomposition(lexsum_tournament_fixture("T2"))) == 1
    single = LexSumPresentation(digraph(1, []), ((CLIQUE, OMEGA),))
    assert predict_growth_degree(presentation_decomposition(single)) == 0
    with pytest.raises(ValueError):
        predict_growth_degree(Decomposition((((0,), 3),)))


def test_predicted_degree_matches_series_fitting():
    # the least k whose denominator (1-x)...(1-x^k) fits the window recovers
    # the same degree k-1 that the decomposition predicts
    from relprof.profiles import profile_sequence
    from relprof.series import fit_rational, series_from

    for name in ("omega", "T2", "T3"):
        pres = lexsum_tournament_fixture(name)
        predicted = predict_growth_degree(presentation_decomposition(pres))
        seq = series_from(profile_sequence(pres, 14).values)
        fitted = None
        for k in range(1, 5):
            if fit_rational(seq, denominator_exponents=tuple(range(1, k + 1))).success:
                fitted = k - 1
                break
        assert fitted == predicted, (name, fitted, predicted)


def test_monomial_shape_and_chain_support():
    m = Monomial((3, 1, 0, 1))
    assert m.shape() == (3, 1, 1, 0)
    support = m.chain_support()
    assert support == [((0,), 2), ((0, 1, 3), 1)]
    rebuilt = Monomial((0, 0, 0, 0))
    for s, mult in support:
        for _ in range(mult):
            rebuilt = rebuilt.times_support(s)
    assert rebuilt == m


def test_monomial_order():
    # shapes equal: lexicographic on exponents
    assert monomial_greater(Monomial((1, 0)), Monomial((0, 1)))
    # shape (2,0) vs (1,1): degrevlex compares sorted vectors
    assert monomial_greater(Monomial((2, 0)), Monomial((1, 1))) != monomial_greater(
        Monomial((1, 1)), Monomial((2, 0))
    )
    with pytest.raises(ValueError):
        monomial_greater(Monomial((1,)), Monomial((2,)))


def test_leading_monomial_two_cliques():
    pres = sum_of_cliques(2)
    decomp = presentation_decomposition(pres)
    ages = enumerate_age(pres, 1)
    (code,) = ages
    assert leading_monomial(pres, decomp, code, 1) == Monomial((1, 0))
    # degree-2 all-edge type: realized by (2,0) and (0,2); leading is (2,0)
    pair_types = leading_monomials(pres, decomp, 2)
    edge_code = canonical_code(clique_graph(2))
    assert pair_types[edge_code] == Monomial((2, 0))
    # empty type
    (zero_code,) = enumerate_age(pres, 0)
    assert leading_monomial(pres, decomp, zero_code, 0) == Monomial((0, 0))


def test_leading_monomial_unknown_type():
    pres = sum_of_cliques(2)
    decomp = presentation_decomposition(pres)
    with pytest.raises(KeyError):
        leading_monomial(pres, decomp, b"nope", 2)


def test_addlayer_two_cliques_clean():
    pres = sum_of_cliques(2)
    decomp = presentation_decomposition(pres)
    report = verify_addlayer(pres, decomp, 5)
    assert isinstance(report, AddLayerReport)
    assert report.ok and report.checked > 0


def test_addlayer_t2_saturation_branch():
    pres = lexsum_tournament_fixture("T2")
    decomp = presentation_decomposition(pres)
    report = verify_addlayer(pres, decomp, 5)
    assert report.ok
    # the cycle type at degree 3 is realized only by one element per block,
    # so its leading monomial saturates the singleton block and exercises
    # the first disjunct of the closure condition
    finite_pos = [i for i, (_, size) in enumerate(decomp.blocks) if size == 1]
    assert finite_pos
    lm3 = leading_monomials(pres, decomp, 3)
    assert any(m.exponents[finite_pos[0]] == 1 for m in lm3.values())
