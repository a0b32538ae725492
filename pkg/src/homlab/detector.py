"""Lossy number-resolving detection and pair-source heralding statistics.

Loss is modelled by averaging the joint distribution over independent
Bernoulli thinning in each mode: a detector with efficiency eta registers
m photons out of M >= m latent ones with probability
C(M, m) eta^m (1 - eta)^(M - m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import binomial
from .joint_dist import JointDistribution


@dataclass(frozen=True)
class LossConfig:
    """Detector efficiencies per mode; source_max bounds the latent sums."""

    eta_a: float
    eta_b: float
    source_max: int | None = None

    def __post_init__(self):
        for eta in (self.eta_a, self.eta_b):
            if not (0.0 <= eta <= 1.0):
                raise ValueError("efficiency must lie in [0, 1]")


@dataclass(frozen=True)
class SqueezedSource:
    """Two-mode squeezed vacuum pair source with photon-pair weights
    tanh^(2n)(r) / cosh^2(r)."""

    r: float
    cutoff: int = 400

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("squeezing parameter r must be non-negative")
        if self.cutoff < 0:
            raise ValueError("cutoff must be non-negative")

    def pair_weight(self, n: int) -> float:
        return tmss_prob(n, self)

    def tail_bound(self) -> float:
        """Geometric tail mass beyond the cutoff."""
        x = math.tanh(self.r) ** 2
        if x == 0.0:
            return 0.0
        return x ** (self.cutoff + 1)


def bernoulli_matrix(eta: float, size: int) -> np.ndarray:
    """A[m, M] = C(M, m) eta^m (1-eta)^(M-m); columns sum to 1."""
    a = np.zeros((size, size))
    for big in range(size):
        for small in range(big + 1):
            a[small, big] = (binomial(big, small)
                            * eta ** small * (1.0 - eta) ** (big - small))
    return a


def lossy_distribution(dist: JointDistribution, loss: LossConfig) -> JointDistribution:
    """Joint distribution seen by lossy detectors; total mass is preserved."""
    size = dist.grid.shape[0]
    if loss.source_max is not None and loss.source_max < dist.grid_max:
        raise ValueError("source_max must cover the distribution grid")
    a = bernoulli_matrix(loss.eta_a, size)
    b = bernoulli_matrix(loss.eta_b, size)
    grid = a @ dist.grid @ b.T
    label = f"{dist.input_label} | loss eta=({loss.eta_a:g},{loss.eta_b:g})"
    return JointDistribution(grid, dist.bs, input_label=label,
                             warnings=dist.warnings)


def tmss_prob(n: int, source: SqueezedSource) -> float:
    """Photon-pair weight p_n = tanh^(2n)(r) / cosh^2(r)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return math.tanh(source.r) ** (2 * n) / math.cosh(source.r) ** 2


def spdc_detection_prob(t: int, eta: float, source: SqueezedSource) -> float:
    """Total probability of registering t photons in the heralding arm:
    sum over latent n' >= t of the Bernoulli factor times the pair weight."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if not (0.0 <= eta <= 1.0):
        raise ValueError("efficiency must lie in [0, 1]")
    total = 0.0
    for n in range(t, source.cutoff + 1):
        total += binomial(n, t) * eta ** t * (1.0 - eta) ** (n - t) * tmss_prob(n, source)
    return total


def herald_posterior(n_prime: int, t: int, eta: float, source: SqueezedSource) -> float:
    """Posterior probability that t registered photons came from the latent
    pair state with n' photons (Bayes over the pair-weight prior)."""
    if n_prime < t:
        raise ValueError("n_prime must be at least the detected count t")
    if t > source.cutoff:
        raise ValueError("t exceeds the source cutoff support")
    if eta == 0.0:
        # degenerate: nothing can be registered, the posterior is the prior
        if t != 0:
            raise ValueError("with eta = 0 only t = 0 is observable")
        return tmss_prob(n_prime, source)
    numerator = (binomial(n_prime, t) * eta ** t * (1.0 - eta) ** (n_prime - t)
                 * tmss_prob(n_prime, source))
    denominator = spdc_detection_prob(t, eta, source)
    return numerator / denominator


def squeezing_db(r: float) -> float:
    """Squeezing strength in dB: 10 log10(exp(-2 r)); 0 at r = 0, negative
    for any real squeezing."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return 10.0 * math.log10(math.exp(-2.0 * r))
