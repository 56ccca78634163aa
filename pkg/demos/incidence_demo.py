"""Subset-inclusion matrices, exact ranks, and why profiles grow.

Run:  python3 demos/incidence_demo.py
"""

from relprof.incidence import (
    build_incidence,
    matrix_rank,
    profile_inequality_via_incidence,
    verify_kantor,
)
from relprof.profiles import profile_finite
from relprof.structures import path_graph

print("Inclusion matrices M(n, n+k) over an m-set have full row rank")
print("whenever 2n + k <= m.  Exact ranks, no floating point:\n")
for (m, n, k) in [(5, 2, 1), (6, 2, 2), (8, 3, 2), (12, 4, 2)]:
    mat = build_incidence(m, n, k)
    rank = matrix_rank(mat)
    print(f"  m={m:2d} n={n} k={k}: {mat.shape[0]:3d} x {mat.shape[1]:3d},"
          f" rank {rank}, full={verify_kantor(m, n, k)}")

print("\nOutside the hypothesis the rank can drop:")
mat = build_incidence(2, 1, 1)
print(f"  m=2 n=1 k=1: shape {mat.shape}, rank {matrix_rank(mat)} (rows: 2)")

print("\nThe rank fact forces profiles to grow on large enough domains:")
print("multiply the type-by-subset indicator with M(n, n+k); the product")
print("keeps full row rank, and distinct independent columns belong to")
print("distinct larger types.\n")
g = path_graph(7)
for n, k in [(1, 1), (2, 1), (2, 2), (3, 1)]:
    ok = profile_inequality_via_incidence(g, n, k)
    print(f"  7-path, n={n}, k={k}: phi({n})={profile_finite(g, n)} <= "
          f"phi({n + k})={profile_finite(g, n + k)}  (replayed: {ok})")
