import itertools

import pytest
from hypothesis import given, settings, strategies as st

from relprof.structures import (
    Signature,
    acyclic_tournament,
    are_isomorphic,
    are_isomorphic_brute_force,
    canonical_code,
    clique_graph,
    cyclic_tournament_3,
    digraph,
    disjoint_union,
    graph_from_edges,
    independent_graph,
    is_autonomous,
    is_local_iso,
    make_struct,
    path_graph,
    restrict,
)


def relabel(struct, perm):
    rels = [
        [tuple(perm[x] for x in t) for t in rel]
        for rel in struct.relations
    ]
    return make_struct(struct.signature.arities, struct.domain_size, rels)


def test_signature_rejects_nonpositive_arity():
    with pytest.raises(ValueError):
        Signature((2, 0))


def test_relstruct_validation():
    with pytest.raises(ValueError):
        make_struct((2,), 3, [[(0, 1, 2)]])
    with pytest.raises(ValueError):
        make_struct((2,), 2, [[(0, 3)]])


def test_restrict_clique_pair_gives_edge():
    k2 = restrict(clique_graph(4), {0, 1})
    assert k2 == clique_graph(2)


def test_restrict_full_domain_is_identity():
    p = path_graph(5)
    assert restrict(p, range(5)) == p


def test_restrict_path_six_to_013_has_one_edge():
    # vertices 0-1 adjacent, 3 isolated after restriction
    r = restrict(path_graph(6), {0, 1, 3})
    assert r == graph_from_edges(3, [(0, 1)])


def test_restrict_rejects_out_of_range():
    with pytest.raises(IndexError):
        restrict(path_graph(3), {0, 5})


def test_restrict_functorial():
    p = path_graph(6)
    inner = restrict(restrict(p, {0, 2, 3, 5}), {0, 2, 3})
    # image of {0,2,3} in the re-indexed {0,2,3,5} is {0,3,5}
    assert are_isomorphic(inner, restrict(p, {0, 3, 5}))


def test_iso_k3_relabelings():
    k3 = clique_graph(3)
    for perm in itertools.permutations(range(3)):
        assert are_isomorphic(k3, relabel(k3, perm))


def test_iso_cycle_vs_acyclic_tournament():
    assert not are_isomorphic(cyclic_tournament_3(), acyclic_tournament(3))
    assert not are_isomorphic_brute_force(cyclic_tournament_3(), acyclic_tournament(3))


def test_iso_empty_structures():
    e1 = make_struct((2,), 0, [[]])
    e2 = make_struct((2,), 0, [[]])
    assert are_isomorphic(e1, e2)


def test_iso_signature_mismatch():
    with pytest.raises(ValueError):
        are_isomorphic(make_struct((2,), 1, [[]]), make_struct((1,), 1, [[]]))


def test_code_constant_for_empty_structure():
    assert canonical_code(make_struct((), 0, [])) == canonical_code(make_struct((), 0, []))


def test_code_distinguishes_tournaments():
    assert canonical_code(cyclic_tournament_3()) != canonical_code(acyclic_tournament(3))


def test_local_iso_identity_and_empty():
    p = path_graph(4)
    assert is_local_iso(p, p, {0: 0, 1: 1})
    assert is_local_iso(p, p, {})


def test_local_iso_order_reversal_fails():
    chain = digraph(3, [(0, 1), (1, 2), (0, 2)])
    assert not is_local_iso(chain, chain, {0: 1, 1: 0})
    assert is_local_iso(chain, chain, {0: 0, 1: 1})


def test_local_iso_rejects_non_injective():
    p = path_graph(3)
    with pytest.raises(ValueError):
        is_local_iso(p, p, {0: 1, 2: 1})


def test_autonomous_trivial_cases():
    p = path_graph(3)
    assert is_autonomous(p, set())
    assert is_autonomous(p, {1})
    assert is_autonomous(p, {0, 1, 2})


def test_autonomous_module_of_three_path():
    # in the 3-path both endpoints attach to the middle vertex, so {0,2} is a
    # module; a fourth vertex breaks it
    assert is_autonomous(path_graph(3), {0, 2})
    assert not is_autonomous(path_graph(4), {0, 2})
    assert not is_autonomous(path_graph(4), {0, 1})


def test_autonomous_requires_binary():
    with pytest.raises(ValueError):
        is_autonomous(make_struct((1,), 2, [[(0,)]]), {0})


small_structs = st.integers(min_value=0, max_value=5).flatmap(
    lambda m: st.builds(
        lambda arcs, marks: make_struct(
            (2, 1),
            m,
            [set(arcs), set(marks)],
        ),
        st.sets(
            st.tuples(
                st.integers(min_value=0, max_value=max(m - 1, 0)),
                st.integers(min_value=0, max_value=max(m - 1, 0)),
            ),
            max_size=12,
        )
        if m
        else st.just(set()),
        st.sets(
            st.tuples(st.integers(min_value=0, max_value=max(m - 1, 0))), max_size=5
        )
        if m
        else st.just(set()),
    )
)


@settings(max_examples=150, deadline=None)
@given(small_structs, st.randoms(use_true_random=False))
def test_code_invariant_under_relabeling(struct, rng):
    perm = list(range(struct.domain_size))
    rng.shuffle(perm)
    assert canonical_code(struct) == canonical_code(relabel(struct, perm))


@settings(max_examples=80, deadline=None)
@given(small_structs, small_structs)
def test_iso_agrees_with_brute_force(left, right):
    if left.signature != right.signature:
        return
    assert are_isomorphic(left, right) == are_isomorphic_brute_force(left, right)


def test_disjoint_union_clique_independent():
    g = disjoint_union(clique_graph(3), independent_graph(3))
    assert g.domain_size == 6
    assert are_isomorphic(restrict(g, {0, 1, 2}), clique_graph(3))
    assert are_isomorphic(restrict(g, {3, 4, 5}), independent_graph(3))
