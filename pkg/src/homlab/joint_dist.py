"""Output joint photon-number distributions P(m_a, m_b) for a beam splitter.

Five specialized input classes (Fock/Fock, Fock/pure, Fock/mixed, pure/pure,
pure/mixed) plus the fully general bipartite path, which doubles as the
oracle every specialized path must agree with.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bs_core import BALANCED, BeamSplitterSetting, bs_prob_exact, measured_amplitude
from .states import EPS_NORM, MixedState, PureState, State

_HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class JointDistribution:
    """Matrix of output joint probabilities P[m_a][m_b], 0 <= m <= grid_max."""

    grid: np.ndarray
    bs: BeamSplitterSetting
    input_label: str
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        object.__setattr__(self, "grid", grid)
        if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
            raise ValueError("grid must be square")

    @property
    def grid_max(self) -> int:
        return self.grid.shape[0] - 1

    @property
    def total_mass(self) -> float:
        return float(self.grid.sum())

    def diagonal(self) -> np.ndarray:
        return np.diag(self.grid).copy()

    def marginal_a(self) -> np.ndarray:
        return self.grid.sum(axis=1)

    def marginal_b(self) -> np.ndarray:
        return self.grid.sum(axis=0)

    def mean_total_photons(self) -> float:
        idx = np.arange(self.grid.shape[0])
        total = idx[:, None] + idx[None, :]
        return float(np.sum(total * self.grid))


def default_grid_max(n_a: int, cutoff_b: int) -> int:
    """Everything representable: a-mode photons plus the b-state cutoff."""
    return n_a + cutoff_b


def joint_fs_fs(n: int, m: int, bs: BeamSplitterSetting,
                grid_max: int | None = None) -> JointDistribution:
    """Fock |n> in a, Fock |m> in b: mass lives on the anti-diagonal
    m_a + m_b = n + m."""
    if grid_max is None:
        grid_max = n + m
    if grid_max < n + m:
        raise ValueError(f"grid_max={grid_max} cannot hold total {n + m} photons")
    grid = np.zeros((grid_max + 1, grid_max + 1))
    for m_a in range(n + m + 1):
        m_b = n + m - m_a
        grid[m_a, m_b] = measured_amplitude(n, m_a, m_b, bs) ** 2
    return JointDistribution(grid, bs, input_label=f"fock:{n} x fock:{m}")


def joint_fs_fs_exact(n: int, m: int, t) -> dict[tuple[int, int], "object"]:
    """Exact-rational anti-diagonal probabilities for a Fock/Fock input;
    certifies which entries are literal zeros."""
    return {(m_a, n + m - m_a): bs_prob_exact(n, m_a, n + m - m_a, t)
            for m_a in range(n + m + 1)}


def joint_fs_pure(n: int, phi_b: PureState, bs: BeamSplitterSetting,
                  grid_max: int | None = None) -> JointDistribution:
    """Fock |n> in a, pure state in b: per-entry product of the b-state
    photon-number weight and a single squared amplitude."""
    if grid_max is None:
        grid_max = default_grid_max(n, phi_b.cutoff)
    weights = phi_b.density_weights()
    grid = np.zeros((grid_max + 1, grid_max + 1))
    for m_a in range(grid_max + 1):
        for m_b in range(grid_max + 1):
            m = m_a + m_b - n
            if 0 <= m <= phi_b.cutoff and weights[m] != 0.0:
                grid[m_a, m_b] = weights[m] * measured_amplitude(n, m_a, m_b, bs) ** 2
    return JointDistribution(grid, bs, input_label=f"fock:{n} x {phi_b.label}")


def joint_fs_mixed(n: int, rho_b: MixedState, bs: BeamSplitterSetting,
                   grid_max: int | None = None) -> JointDistribution:
    """Fock |n> in a, mixed state in b: only diagonal density entries enter."""
    if grid_max is None:
        grid_max = default_grid_max(n, rho_b.cutoff)
    diag = np.real(np.diag(rho_b.rho))
    grid = np.zeros((grid_max + 1, grid_max + 1))
    for m_a in range(grid_max + 1):
        for m_b in range(grid_max + 1):
            m = m_a + m_b - n
            if 0 <= m <= rho_b.cutoff and diag[m] != 0.0:
                grid[m_a, m_b] = diag[m] * measured_amplitude(n, m_a, m_b, bs) ** 2
    return JointDistribution(grid, bs, input_label=f"fock:{n} x {rho_b.label}")


def joint_pure_pure(psi_a: PureState, phi_b: PureState, bs: BeamSplitterSetting,
                    grid_max: int | None = None) -> JointDistribution:
    """Pure states in both modes: coherent amplitude sum over the a-mode
    photon number before squaring."""
    if grid_max is None:
        grid_max = psi_a.cutoff + phi_b.cutoff
    ca = psi_a.amplitudes
    db = phi_b.amplitudes
    grid = np.zeros((grid_max + 1, grid_max + 1))
    for m_a in range(grid_max + 1):
        for m_b in range(grid_max + 1):
            s = m_a + m_b
            amp = 0.0 + 0.0j
            for n in range(max(0, s - phi_b.cutoff), min(psi_a.cutoff, s) + 1):
                if ca[n] == 0 or db[s - n] == 0:
                    continue
                amp += ca[n] * db[s - n] * measured_amplitude(n, m_a, m_b, bs)
            grid[m_a, m_b] = abs(amp) ** 2
    return JointDistribution(grid, bs, input_label=f"{psi_a.label} x {phi_b.label}")


def joint_pure_mixed(psi_a: PureState, rho_b: MixedState, bs: BeamSplitterSetting,
                     grid_max: int | None = None) -> JointDistribution:
    """Pure state in a, mixed state in b: bilinear trace sum.

    The result of the double sum is already a probability (real, from
    Hermiticity); no outer modulus-square is applied, which is what makes
    this path reduce exactly from the general bipartite formula.
    """
    if rho_b.hermiticity_residual() > _HERMITICITY_TOL:
        raise ValueError("density matrix is not Hermitian within tolerance")
    if grid_max is None:
        grid_max = psi_a.cutoff + rho_b.cutoff
    ca = psi_a.amplitudes
    rho = rho_b.rho
    support = [n for n in range(ca.size) if ca[n] != 0]
    grid = np.zeros((grid_max + 1, grid_max + 1))
    for m_a in range(grid_max + 1):
        for m_b in range(grid_max + 1):
            s = m_a + m_b
            total = 0.0 + 0.0j
            for n in support:
                m = s - n
                if not (0 <= m <= rho_b.cutoff):
                    continue
                fn = measured_amplitude(n, m_a, m_b, bs)
                if fn == 0.0:
                    continue
                for np_ in support:
                    mp = s - np_
                    if not (0 <= mp <= rho_b.cutoff):
                        continue
                    r = rho[m, mp]
                    if r == 0:
                        continue
                    total += ca[n] * np.conj(ca[np_]) * r * fn \
                        * measured_amplitude(np_, m_a, m_b, bs)
            grid[m_a, m_b] = total.real
    return JointDistribution(grid, bs, input_label=f"{psi_a.label} x {rho_b.label}")


def joint_general(rho_ab, bs: BeamSplitterSetting,
                  grid_max: int | None = None,
                  eps_norm: float = EPS_NORM) -> JointDistribution:
    """Full bipartite trace formula; the oracle for every specialized path.

    ``rho_ab`` is either a pair ``(state_a, state_b)`` of pure/mixed states
    (product input, evaluated without materializing the four-index table) or
    a four-index ndarray ``rho[n, m, n', m']``.
    """
    if isinstance(rho_ab, tuple):
        state_a, state_b = rho_ab
        rho_a = _as_density(state_a)
        rho_b = _as_density(state_b)
        if grid_max is None:
            grid_max = (rho_a.shape[0] - 1) + (rho_b.shape[0] - 1)
        grid = _general_product(rho_a, rho_b, bs, grid_max)
        trace = float(np.real(np.trace(rho_a)) * np.real(np.trace(rho_b)))
        label = f"general({_label(state_a)} x {_label(state_b)})"
    else:
        table = np.asarray(rho_ab, dtype=complex)
        if table.ndim != 4:
            raise ValueError("coefficient table must be four-index rho[n, m, n', m']")
        if grid_max is None:
            grid_max = (table.shape[0] - 1) + (table.shape[1] - 1)
        grid = _general_table(table, bs, grid_max)
        trace = float(np.real(np.einsum("nmnm->", table)))
        label = "general(table)"
    warnings = ()
    if 1.0 - trace > eps_norm:
        warnings = (f"input trace deficit {1.0 - trace:.3e} exceeds {eps_norm:g}",)
    return JointDistribution(grid, bs, input_label=label, warnings=warnings)


def _as_density(state) -> np.ndarray:
    if isinstance(state, PureState):
        return state.to_mixed().rho
    if isinstance(state, MixedState):
        return state.rho
    return np.asarray(state, dtype=complex)


def _label(state) -> str:
    return getattr(state, "label", "array")


def _general_product(rho_a: np.ndarray, rho_b: np.ndarray,
                     bs: BeamSplitterSetting, grid_max: int) -> np.ndarray:
    dim_a = rho_a.shape[0]
    dim_b = rho_b.shape[0]
    grid = np.zeros((grid_max + 1, grid_max + 1))
    for m_a in range(grid_max + 1):
        for m_b in range(grid_max + 1):
            s = m_a + m_b
            total = 0.0 + 0.0j
            for n in range(max(0, s - dim_b + 1), min(dim_a - 1, s) + 1):
                fn = measured_amplitude(n, m_a, m_b, bs)
                if fn == 0.0:
                    continue
                for np_ in range(max(0, s - dim_b + 1), min(dim_a - 1, s) + 1):
                    ra = rho_a[n, np_]
                    if ra == 0:
                        continue
                    rb = rho_b[s - n, s - np_]
                    if rb == 0:
                        continue
                    total += ra * rb * fn * measured_amplitude(np_, m_a, m_b, bs)
            grid[m_a, m_b] = total.real
    return grid


def _general_table(table: np.ndarray, bs: BeamSplitterSetting,
                   grid_max: int) -> np.ndarray:
    dim_a, dim_b = table.shape[0], table.shape[1]
    grid = np.zeros((grid_max + 1, grid_max + 1))
    for m_a in range(grid_max + 1):
        for m_b in range(grid_max + 1):
            s = m_a + m_b
            total = 0.0 + 0.0j
            for n in range(max(0, s - dim_b + 1), min(dim_a - 1, s) + 1):
                fn = measured_amplitude(n, m_a, m_b, bs)
                for np_ in range(max(0, s - dim_b + 1), min(dim_a - 1, s) + 1):
                    coeff = table[n, s - n, np_, s - np_]
                    if coeff == 0:
                        continue
                    total += coeff * fn * measured_amplitude(np_, m_a, m_b, bs)
            grid[m_a, m_b] = total.real
    return grid
