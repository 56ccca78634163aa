import itertools
import random

from relprof import canon
from relprof.structures import (
    acyclic_tournament,
    canonical_code,
    clique_graph,
    independent_graph,
    make_struct,
    path_graph,
)


def test_search_agrees_with_permutation_sweep_on_random_structures():
    rng = random.Random(7)
    for _ in range(120):
        m = rng.randint(0, 6)
        arcs = {
            (rng.randrange(m), rng.randrange(m))
            for _ in range(rng.randint(0, m * m))
        } if m else set()
        marks = {(v,) for v in range(m) if rng.random() < 0.4}
        arities = (2, 1)
        rels = (frozenset(arcs), frozenset(marks))
        assert canon.canonical_form(arities, m, rels) == canon.brute_force_form(
            arities, m, rels
        )


def test_search_agrees_with_sweep_ternary():
    rng = random.Random(11)
    for _ in range(40):
        m = rng.randint(1, 5)
        triples = {
            tuple(rng.randrange(m) for _ in range(3)) for _ in range(rng.randint(0, 8))
        }
        rels = (frozenset(triples),)
        assert canon.canonical_form((3,), m, rels) == canon.brute_force_form((3,), m, rels)


def test_highly_symmetric_structures_terminate_quickly():
    # cliques, independent sets and empty signatures have huge automorphism
    # groups; automorphism pruning must keep these cheap
    for n in (6, 9, 12):
        canonical_code(clique_graph(n))
        canonical_code(independent_graph(n))
        canonical_code(make_struct((), n, []))


def test_clique_codes_differ_by_size():
    codes = {canonical_code(clique_graph(n)) for n in range(6)}
    assert len(codes) == 6


def test_code_invariance_exhaustive_small():
    structs = [
        path_graph(4),
        clique_graph(4),
        acyclic_tournament(4),
        make_struct((2, 1), 3, [[(0, 1), (1, 2)], [(2,)]]),
    ]
    for s in structs:
        base = canonical_code(s)
        for perm in itertools.permutations(range(s.domain_size)):
            rels = [
                [tuple(perm[x] for x in t) for t in rel] for rel in s.relations
            ]
            relabeled = make_struct(s.signature.arities, s.domain_size, rels)
            assert canonical_code(relabeled) == base
