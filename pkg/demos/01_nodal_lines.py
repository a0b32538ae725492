"""Joint output distributions and the central nodal line.

Mixing any odd-photon-number state with an arbitrary partner on a balanced
beam splitter sends every diagonal entry P(m, m) of the output joint
photon-number distribution to zero — the Hong-Ou-Mandel dip is the
(1 photon, 1 photon) special case of this structure.
"""

import numpy as np

import homlab as h

# The classic limit: |1, 1> in, never one photon in each output arm.
table = h.joint_fs_fs_exact(1, 1, "1/2")
print("HOM limit, exact rational probabilities:")
for (m_a, m_b), p in sorted(table.items()):
    print(f"  P({m_a}, {m_b}) = {p}")

# Same effect with a bright coherent partner: the diagonal stays dark.
dist = h.joint_fs_pure(1, h.coherent(3), h.BALANCED, grid_max=20)
print(f"\n|1> x coherent(beta=3), grid_max=20, total mass {dist.total_mass:.6f}")
print(f"  largest diagonal entry: {np.max(dist.diagonal()):.3e}")

# A noisy thermal partner changes nothing — parity of the a-mode rules.
dist = h.joint_fs_mixed(3, h.thermal(9), h.BALANCED, grid_max=30)
print(f"\n|3> x thermal(nbar=9): largest diagonal entry "
      f"{np.max(dist.diagonal()):.3e}")

# Even photon number: no nodal line, the diagonal lights up.
dist = h.joint_fs_pure(2, h.coherent(3), h.BALANCED)
print(f"\n|2> x coherent(beta=3): largest diagonal entry "
      f"{np.max(dist.diagonal()):.3e} (no nodal line for even n)")

# The algebraic reason: the diagonal polynomial always carries a (T - R)
# factor when n is odd, so it vanishes identically at T = R = 1/2.
bs = h.BeamSplitterSetting.from_transmittance("2/3")
for mp in (2, 5):
    lhs = (bs.transmittance - bs.reflectance) * h.cos_factor_residual(mp, 3, bs)
    print(f"\n(T - R) * residual = {lhs} = g({mp}, {mp} | n=3) = "
          f"{h.g_poly(mp, mp, 3, bs)}")
