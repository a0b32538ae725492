"""Polynomial families of interference zeros.

Certain quadratic integer polynomial pairs (m_a(k), m_b(k)) annihilate the
interference polynomial for every integer k, tracing whole curves of exact
zeros through the photon-number plane. They can be certified exactly and
rediscovered by brute-force search.
"""

from fractions import Fraction

import homlab as h

# Certify every built-in family by full coefficient expansion plus
# independent multipoint evaluation.
for (n, t), families in sorted(h.KNOWN_FAMILIES.items()):
    print(f"n={n}, T={t}:")
    for sol in families:
        res = h.verify_parametric(sol)
        ks = sol.valid_k(-3, 3)
        print(f"  m_a={sol.a_coeffs} m_b={sol.b_coeffs} valid={res.valid} "
              f"(k in [-3,3] with both >= 0: {ks})")

# Rediscover balanced n=2 families by exhaustive search over small
# coefficients (results are canonicalized and verified).
found = h.search_parametric(2, Fraction(1, 2), 2, (-3, 3))
print(f"\nsearch n=2, T=1/2, coeffs in [-3, 3]: {len(found)} families")
for sol in found:
    print(f"  m_a={sol.a_coeffs} m_b={sol.b_coeffs}")

# The same search for n=3 at T=3/4 comes up empty: the seven isolated
# integer zeros there do not organize into quadratic families.
found = h.search_parametric(3, Fraction(3, 4), 2, (-10, 10))
print(f"\nsearch n=3, T=3/4, coeffs in [-10, 10]: {len(found)} families")

# A deliberately wrong family is rejected with an exact witness.
bad = h.ParametricSolution(a_coeffs=(0, 1, 2), b_coeffs=(1, 4, 2),
                           n=2, t=Fraction(1, 2))
res = h.verify_parametric(bad)
print(f"\nperturbed family valid={res.valid}, first nonzero residual "
      f"coefficient: index {res.first_nonzero[0]}, value {res.first_nonzero[1]}")
