"""Exact integer search for off-diagonal interference zeros.

At rational transmittance, every amplitude zero is a root of an integer
polynomial, so zeros can be located and certified exactly — no floating
point involved.
"""

from fractions import Fraction

import homlab as h

# All integer zeros of the interference polynomial for n = 3 photons at
# T = 3/4, scanned exhaustively up to 200.
zeros = h.bfs_zeros(3, Fraction(3, 4), 200)
print(f"n=3, T=3/4, m_max=200: {len(zeros.zeros)} zeros")
for m_a, m_b in zeros.zeros:
    tag = "physical" if (m_a, m_b) in zeros.physical() else "below threshold"
    print(f"  ({m_a:>3}, {m_b:>3})  [{tag}]")

# Certify one of them as a literal zero of the output probability.
p = h.bs_prob_exact(3, 11, 55, Fraction(3, 4))
print(f"\nExact output probability at (11, 55): {p} (literal zero)")

# The balanced n=2 zeros obey a closed form: (m_a - m_b)^2 = m_a + m_b.
zeros2 = h.bfs_zeros(2, Fraction(1, 2), 60)
assert all((a - b) ** 2 == a + b for a, b in zeros2.zeros)
print(f"\nn=2, T=1/2: all {len(zeros2.zeros)} zeros satisfy "
      "(m_a - m_b)^2 = m_a + m_b")

# Discrete extremal branches for n = 2: integer points where the
# distribution is locally flattest along the valleys.
print("\nExtremal branch points (n=2, balanced):")
for m_a in range(6):
    for k in range(0, 8):
        pts = h.extremal_branch_points(m_a, k)
        if pts:
            print(f"  m_a={m_a}, k={k}: m_b = {pts}")
