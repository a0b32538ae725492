"""Locating and certifying interference zeros of the beam-splitter polynomial.

Covers: diagonal nodal-line scans of computed distributions, exhaustive
integer (Diophantine) zero searches at rational transmittance, verification
and brute-force search of parametric integer-polynomial zero families, and
the closed-form extremal branch points of the two-photon case at the
balanced setting.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bs_core import BeamSplitterSetting, g_poly
from .joint_dist import JointDistribution
from .numerics import binomial, falling_factorial

# ---------------------------------------------------------------------------
# integer form of the zero polynomial at rational transmittance
# ---------------------------------------------------------------------------


def _int_weights(n: int, t: Fraction) -> tuple[int, int, int]:
    """Return (num, rnum, den^n) such that
    g = sum_q C(n,q)(-1)^q (m_a)_{n-q} num^{n-q} (m_b)_q rnum^q / den^n."""
    t = Fraction(t)
    num, den = t.numerator, t.denominator
    return num, den - num, den ** n


def _g_int(m_a: int, m_b: int, n: int, num: int, rnum: int) -> int:
    """Integer numerator of g at rational T; total over all integer m_a, m_b."""
    total = 0
    for q in range(n + 1):
        term = (binomial(n, q) * falling_factorial(m_a, n - q) * num ** (n - q)
                * falling_factorial(m_b, q) * rnum ** q)
        total += -term if q % 2 else term
    return total


# ---------------------------------------------------------------------------
# diagonal scan of a computed distribution
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CnlReport:
    """Per-entry diagonal check of a joint distribution."""

    diagonal: tuple[float, ...]
    tol: float

    @property
    def passes(self) -> tuple[bool, ...]:
        return tuple(v <= self.tol for v in self.diagonal)

    @property
    def verdict(self) -> bool:
        return all(self.passes)


def cnl_scan(dist: JointDistribution, tol: float = 1e-14) -> CnlReport:
    """Check every diagonal entry of the distribution against ``tol``."""
    return CnlReport(diagonal=tuple(float(v) for v in dist.diagonal()), tol=tol)


# ---------------------------------------------------------------------------
# exhaustive integer zero search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroSet:
    """All integer zeros of g(., .|n) at rational T within the scan bound.

    The scan runs over 1 <= m_a <= m_max, 0 <= m_b <= m_max: the m_a = 0 row
    is degenerate (it reduces to single falling-factorial roots) and is
    excluded.  A zero is flagged physical when m_a + m_b >= n, i.e. when the
    measured pair is reachable from some input with the a-mode Fock state.
    """

    n: int
    t: Fraction
    m_max: int
    zeros: tuple[tuple[int, int], ...]

    def physical(self) -> tuple[tuple[int, int], ...]:
        return tuple(z for z in self.zeros if z[0] + z[1] >= self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "T": {"num": self.t.numerator, "den": self.t.denominator},
            "m_max": self.m_max,
            "zeros": [{"m_a": a, "m_b": b, "physical": a + b >= self.n}
                      for a, b in self.zeros],
        }


def bfs_zeros(n: int, t, m_max: int) -> ZeroSet:
    """Exhaustive exact scan for integer zeros of g at rational T."""
    t = Fraction(t)
    num, rnum, _ = _int_weights(n, t)
    mb = np.arange(m_max + 1, dtype=object)
    ff_b = [np.array([falling_factorial(int(v), q) for v in mb], dtype=object)
            for q in range(n + 1)]
    # int64 fast path when magnitudes provably fit
    bound = sum(binomial(n, q) * falling_factorial(m_max + n, n)
                * max(abs(num), abs(rnum)) ** n for q in range(n + 1))
    use_int64 = bound < 2 ** 62
    if use_int64:
        ff_b = [arr.astype(np.int64) for arr in ff_b]
    zeros: list[tuple[int, int]] = []
    for m_a in range(1, m_max + 1):
        row = ff_b[0] * 0
        for q in range(n + 1):
            coeff = (binomial(n, q) * falling_factorial(m_a, n - q)
                     * num ** (n - q) * rnum ** q)
            if q % 2:
                coeff = -coeff
            if coeff:
                row = row + coeff * ff_b[q]
        hits = np.nonzero(row == 0)[0]
        zeros.extend((m_a, int(b)) for b in hits)
    return ZeroSet(n=n, t=t, m_max=m_max, zeros=tuple(sorted(zeros)))


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficients low-to-high, int or Fraction)
# ---------------------------------------------------------------------------


def _ptrim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return tuple(p)


def _padd(p, q):
    size = max(len(p), len(q))
    return _ptrim(tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                        for i in range(size)))


def _pmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _ptrim(tuple(out))


def _pscale(p, c):
    return _ptrim(tuple(c * a for a in p))


def _pfalling(p, q: int):
    """Falling-factorial product p (p-1) ... (p-q+1) of a polynomial."""
    out = (1,)
    for j in range(q):
        out = _pmul(out, _padd(p, (-j,)))
    return out


def _pshift(p, c: int):
    """Compose p(k + c)."""
    out = (0,)
    kc = (c, 1)
    power = (1,)
    for coeff in p:
        out = _padd(out, _pscale(power, coeff))
        power = _pmul(power, kc)
    return _ptrim(out)


def _preflect(p):
    """Compose p(-k)."""
    return _ptrim(tuple(-a if i % 2 else a for i, a in enumerate(p)))


def _peval(p, k: int):
    total = 0
    power = 1
    for a in p:
        total += a * power
        power *= k
    return total


# ---------------------------------------------------------------------------
# parametric polynomial families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParametricSolution:
    """Integer polynomial pair (m_a(k), m_b(k)) claimed to annihilate g
    identically; coefficients stored low-to-high, degree <= 3."""

    a_coeffs: tuple[int, ...]
    b_coeffs: tuple[int, ...]
    n: int
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a_coeffs", _ptrim(tuple(int(c) for c in self.a_coeffs)))
        object.__setattr__(self, "b_coeffs", _ptrim(tuple(int(c) for c in self.b_coeffs)))
        object.__setattr__(self, "t", Fraction(self.t))
        if len(self.a_coeffs) > 4 or len(self.b_coeffs) > 4:
            raise ValueError("polynomial degree must be at most 3")

    def m_a(self, k: int) -> int:
        return _peval(self.a_coeffs, k)

    def m_b(self, k: int) -> int:
        return _peval(self.b_coeffs, k)

    def valid_k(self, lo: int, hi: int) -> tuple[int, ...]:
        """k values in [lo, hi] where both polynomials are non-negative."""
        return tuple(k for k in range(lo, hi + 1)
                     if self.m_a(k) >= 0 and self.m_b(k) >= 0)

    def to_json(self) -> dict:
        return {
            "m_a_coeffs": list(self.a_coeffs),
            "m_b_coeffs": list(self.b_coeffs),
            "n": self.n,
            "T": {"num": self.t.numerator, "den": self.t.denominator},
        }


@dataclass(frozen=True)
class VerifyResult:
    valid: bool
    residual_coefficients: tuple
    first_nonzero: tuple[int, Fraction] | None
    certificates_agree: bool


def _g_composite(sol: ParametricSolution):
    """Exact integer-coefficient numerator polynomial of g(m_a(k), m_b(k))."""
    num, rnum, _ = _int_weights(sol.n, sol.t)
    n = sol.n
    total = (0,)
    for q in range(n + 1):
        coeff = binomial(n, q) * num ** (n - q) * rnum ** q
        if q % 2:
            coeff = -coeff
        term = _pmul(_pfalling(sol.a_coeffs, n - q), _pfalling(sol.b_coeffs, q))
        total = _padd(total, _pscale(term, coeff))
    return total


def verify_parametric(sol: ParametricSolution) -> VerifyResult:
    """Certify a parametric family by two independent exact routes:
    full coefficient expansion, and evaluation at 3n + 1 integer points."""
    residual = _g_composite(sol)
    first = None
    for idx, coeff in enumerate(residual):
        if coeff != 0:
            first = (idx, Fraction(coeff, sol.t.denominator ** sol.n))
            break
    valid_expand = first is None
    num, rnum, _ = _int_weights(sol.n, sol.t)
    valid_eval = all(_g_int(sol.m_a(k), sol.m_b(k), sol.n, num, rnum) == 0
                     for k in range(3 * sol.n + 1))
    return VerifyResult(valid=valid_expand,
                        residual_coefficients=residual,
                        first_nonzero=first,
                        certificates_agree=valid_expand == valid_eval)


def canonical_form(sol: ParametricSolution) -> ParametricSolution:
    """Representative of the family's orbit under k -> k + c and k -> -k + c:
    the lexicographically smallest coefficient vector over a window of shifts
    wide enough to contain the orbit minimum for in-range families."""
    span = 3 * (max((abs(c) for c in sol.a_coeffs + sol.b_coeffs), default=0) + 1)
    best = None
    for reflect in (False, True):
        pa = _preflect(sol.a_coeffs) if reflect else sol.a_coeffs
        pb = _preflect(sol.b_coeffs) if reflect else sol.b_coeffs
        for c in range(-span, span + 1):
            cand = (_pshift(pa, c), _pshift(pb, c))
            if best is None or cand < best:
                best = cand
    return ParametricSolution(a_coeffs=best[0], b_coeffs=best[1], n=sol.n, t=sol.t)


def _is_constant(coeffs) -> bool:
    return all(c == 0 for c in coeffs[1:])


def _zero_table(n: int, num: int, rnum: int, bound: int) -> np.ndarray:
    """Boolean table Z[x + bound, y + bound] == (g(x, y) == 0) on the square
    [-bound, bound]^2, evaluated exactly (int64 when provably safe)."""
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    ff_max = falling_factorial(bound + n, n)
    worst = (n + 1) * max(binomial(n, q) for q in range(n + 1)) \
        * ff_max * max(abs(num), abs(rnum), 1) ** n * max(ff_max, 1)
    dtype = np.int64 if worst < 2 ** 62 else object
    col = vals.astype(dtype)

    def ff_vec(q: int) -> np.ndarray:
        out = np.ones_like(col)
        for j in range(q):
            out = out * (col - j)
        return out

    total = np.zeros((vals.size, vals.size), dtype=dtype)
    for q in range(n + 1):
        coeff = binomial(n, q) * num ** (n - q) * rnum ** q
        if q % 2:
            coeff = -coeff
        total = total + coeff * ff_vec(n - q)[:, None] * ff_vec(q)[None, :]
    return total == 0


def _search_strip(args):
    """Scan all (a, b) coefficient tuples with the given a0 values."""
    (n, t_pair, degree, lo, hi, a0_values) = args
    t = Fraction(*t_pair)
    num, rnum, _ = _int_weights(n, t)
    npoints = degree * n + 1
    kpts = np.arange(npoints, dtype=np.int64)
    powers = np.vstack([kpts ** j for j in range(degree + 1)])  # (deg+1, K)
    b_tuples = [tup for tup in itertools.product(range(lo, hi + 1), repeat=degree + 1)
                if not _is_constant(tup)]
    vb = np.array(b_tuples, dtype=np.int64) @ powers  # (Nb, K)
    cmax = max(abs(lo), abs(hi))
    bounds = [cmax * sum(k ** j for j in range(degree + 1)) for k in range(npoints)]
    tables = [_zero_table(n, num, rnum, b) for b in bounds]
    hits = []
    for a0 in a0_values:
        # first point is k = 0, where values reduce to the constant terms
        base_idx = np.nonzero(tables[0][a0 + bounds[0], vb[:, 0] + bounds[0]])[0]
        if base_idx.size == 0:
            continue
        for rest in itertools.product(range(lo, hi + 1), repeat=degree):
            a = (a0,) + rest
            if _is_constant(a):
                continue
            surv = base_idx
            for i in range(1, npoints):
                x = _peval(a, i)
                surv = surv[tables[i][x + bounds[i], vb[surv, i] + bounds[i]]]
                if surv.size == 0:
                    break
            for j in surv:
                hits.append((a, b_tuples[int(j)]))
    return hits


def search_parametric(n: int, t, degree: int, coeff_range: tuple[int, int],
                      workers: int | None = None) -> list[ParametricSolution]:
    """Brute-force scan of integer coefficient tuples for polynomial pairs
    that annihilate g identically.

    Constant-in-k polynomials are excluded (they reduce to single integer
    zeros already covered by :func:`bfs_zeros`).  Results are canonicalized,
    deduplicated, exactly verified, and returned in deterministic order.
    """
    if degree not in (2, 3):
        raise ValueError("degree must be 2 or 3")
    t = Fraction(t)
    lo, hi = coeff_range
    if lo > hi:
        raise ValueError("empty coefficient range")
    if workers is None:
        workers = max(1, int(os.environ.get("HOMLAB_THREADS", "1")))
    a0_values = list(range(lo, hi + 1))
    if workers > 1:
        chunks = [a0_values[i::workers] for i in range(workers)]
        args = [(n, (t.numerator, t.denominator), degree, lo, hi, chunk)
                for chunk in chunks if chunk]
        hits = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_search_strip, args):
                hits.extend(part)
    else:
        hits = _search_strip((n, (t.numerator, t.denominator), degree, lo, hi, a0_values))
    found: dict[tuple, ParametricSolution] = {}
    for a, b in hits:
        sol = ParametricSolution(a_coeffs=a, b_coeffs=b, n=n, t=t)
        if not verify_parametric(sol).valid:
            continue
        canon = canonical_form(sol)
        found[(canon.a_coeffs, canon.b_coeffs)] = canon
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# extremal branch points for n = 2 at the balanced setting
# ---------------------------------------------------------------------------


def extremal_branch_points(m_a: int, k: int) -> tuple[int, int] | None:
    """Integer solutions m_b = m_a + (1 +/- sqrt(1 + 8 m_a + k)) / 2 of the
    discrete extremal condition for the two-photon balanced case; None when
    the discriminant is not an odd perfect square or a branch goes negative."""
    disc = 1 + 8 * m_a + k
    if disc < 0:
        return None
    root = math.isqrt(disc)
    if root * root != disc or root % 2 == 0:
        return None
    plus = m_a + (1 + root) // 2
    minus = m_a + (1 - root) // 2
    if plus < 0 or minus < 0:
        return None
    return (plus, minus)


# ---------------------------------------------------------------------------
# built-in verified families (quadratics in k)
# ---------------------------------------------------------------------------

_HALF = Fraction(1, 2)
_THREE_QUARTERS = Fraction(3, 4)

#: families annihilating g(., .|2) at T = 1/2  (coefficients low-to-high)
BALANCED_N2_FAMILIES = tuple(
    ParametricSolution(a_coeffs=a, b_coeffs=b, n=2, t=_HALF)
    for a, b in [
        ((0, -1, 2), (1, -3, 2)),
        ((0, 1, 2), (1, 3, 2)),
        # a_1 = 2 is forced: (m_a - m_b)^2 = m_a + m_b requires
        # (4k + 1 - a_1 k)^2 = 16 k^2 + (6 + a_1) k + 1
        ((0, 2, 8), (1, 6, 8)),
        ((3, -5, 2), (1, -3, 2)),
        ((1, 3, 2), (3, 5, 2)),
        ((1, 6, 8), (3, 10, 8)),
        ((3, 5, 2), (6, 7, 2)),
        ((6, 7, 2), (10, 9, 2)),
    ]
)

#: families annihilating g(., .|3) at T = 1/2 (first row is the diagonal line)
BALANCED_N3_FAMILIES = tuple(
    ParametricSolution(a_coeffs=a, b_coeffs=b, n=3, t=_HALF)
    for a, b in [
        ((0, 1), (0, 1)),
        ((2, 7, 6), (7, 13, 6)),
        ((1, 5, 6), (5, 11, 6)),
    ]
)

#: families annihilating g(., .|2) at T = 3/4
T34_N2_FAMILIES = tuple(
    ParametricSolution(a_coeffs=a, b_coeffs=b, n=2, t=_THREE_QUARTERS)
    for a, b in [
        ((0, 1, 12), (0, -9, 36)),
        ((0, 1, 12), (1, 15, 36)),
        ((1, 7, 12), (0, 9, 36)),
        ((1, 7, 12), (7, 33, 36)),
        ((6, 17, 12), (10, 39, 36)),
        ((11, 23, 12), (22, 57, 36)),
    ]
)

KNOWN_FAMILIES: dict[tuple[int, Fraction], tuple[ParametricSolution, ...]] = {
    (2, _HALF): BALANCED_N2_FAMILIES,
    (3, _HALF): BALANCED_N3_FAMILIES,
    (2, _THREE_QUARTERS): T34_N2_FAMILIES,
}
