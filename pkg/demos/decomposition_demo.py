"""Monomorphic decompositions and leading monomials.

Run:  python3 demos/decomposition_demo.py
"""

from relprof.decomposition import (
    canonical_decomposition,
    leading_monomials,
    predict_growth_degree,
    presentation_decomposition,
    verify_addlayer,
)
from relprof.presentations import OMEGA, lexsum_tournament_fixture, sum_of_cliques
from relprof.structures import clique_graph, disjoint_union, independent_graph, path_graph


def size_str(size):
    return "omega" if size is OMEGA else str(size)


print("Coarsest monomorphic decompositions of finite structures:\n")
for label, struct in [
    ("K4", clique_graph(4)),
    ("K6 + empty6", disjoint_union(clique_graph(6), independent_graph(6))),
    ("6-path", path_graph(6)),
]:
    blocks = canonical_decomposition(struct).blocks
    print(f"  {label:12s} {len(blocks)} blocks: "
          + " | ".join(",".join(map(str, m)) for m, _ in blocks))

print("\nPresented structures decompose by presentation slots;")
print("slots that fuse in the presented structure are merged:\n")
for name in ("T1", "T2", "T3"):
    pres = lexsum_tournament_fixture(name)
    decomp = presentation_decomposition(pres)
    parts = ", ".join(f"{{{','.join(map(str, g))}}}:{size_str(s)}" for g, s in decomp.blocks)
    degree = predict_growth_degree(decomp)
    print(f"  {name}: {parts}   predicted polynomial degree {degree}")

print("\nLeading monomials of the two-clique age (exponent = elements per block):")
pres = sum_of_cliques(2)
decomp = presentation_decomposition(pres)
for degree in range(1, 5):
    table = leading_monomials(pres, decomp, degree)
    print(f"  degree {degree}: " + ", ".join(str(m.exponents) for m in sorted(
        table.values(), key=lambda m: m.exponents, reverse=True)))

report = verify_addlayer(pres, decomp, 6)
print(f"\nLayer closure through degree 6: {report.checked} checks, "
      f"{len(report.counterexamples)} counterexamples")
