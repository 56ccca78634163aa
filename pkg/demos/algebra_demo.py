"""The graded age algebra: products of types, the point-sum element, and the
shuffle algebra it generalizes.

Run:  python3 demos/algebra_demo.py
"""

import math

from relprof.algebra import (
    AgeBasis,
    check_e_regular,
    e_element,
    e_rank,
    multiply,
    power,
    search_zero_divisors,
)
from relprof.presentations import colored_dense_chain, lexsum_tournament_fixture
from relprof.shuffle import shuffle_words, word

print("Age algebra of the 2-colored dense chain, degrees 0..5.\n")
basis = AgeBasis.build(colored_dense_chain(2), 5)
print("dimensions:", [basis.dimension(n) for n in range(6)], "(= 2^n)")

e = e_element(basis)
ee = multiply(basis, e, e)
print("e * e spreads coefficient 2 over the", basis.dimension(2), "two-element types:",
      sorted(set(c for _, c in ee.coeffs)))

print("\nMultiplication by e is injective in every degree (so the profile grows):")
for n in range(5):
    print(f"  degree {n}: rank {e_rank(basis, n)} of dimension {basis.dimension(n)}"
          f"  regular={check_e_regular(basis, n)}")

report = search_zero_divisors(basis, 5, random_probes=10)
print(f"\nZero-divisor search over degrees summing <= 5: "
      f"{report.kernels_checked} exact kernels, {report.random_probes} random probes, "
      f"witness found: {report.found}")

print("\nTournament ages satisfy e^n = n! * (sum of all n-element types):")
tbasis = AgeBasis.build(lexsum_tournament_fixture("T2"), 5)
for n in (2, 3, 4):
    en = power(tbasis, e_element(tbasis), n)
    coeffs = sorted(set(c for _, c in en.coeffs))
    print(f"  n={n}:  e^{n} has {len(en.coeffs)} terms, all with coefficient "
          f"{coeffs[0]} = {n}!  ({math.factorial(n)})")

print("\nThe shuffle algebra is the same product on subset-letter words:")
got = shuffle_words(word("ab", {"a"}), word("ab", {"b"}))
for letters, coeff in got.terms:
    print(f"  {coeff} * " + "".join("{" + ",".join(sorted(l)) + "}" for l in letters))
