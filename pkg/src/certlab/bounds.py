"""Analytic bounds on the average measurement entropy.

Maassen-Uffink (two bases), the purity-matrix bounds and the resulting
entropy bounds for any number of bases, the Sanchez-Ruiz bounds for
complete MUB configurations, and the Haar-average entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

import numpy as np
from scipy.special import digamma, xlogy

from .entropy import MeasurementSet, shannon_entropy
from .qstate import su_generators

__all__ = [
    "BoundsReport",
    "maassen_uffink_bound",
    "m_matrix",
    "purity_bounds",
    "certainty_uncertainty_bounds",
    "sanchez_ruiz_bounds",
    "haar_mean_entropy",
]


@dataclass(frozen=True)
class BoundsReport:
    """Collected analytic bounds for one measurement set (entropies in nats)."""

    L: int
    N: int
    m_min: float
    m_max: float
    p_min: float
    p_max: float
    b_min: float
    b_max: float
    maassen_uffink: float | None = None
    sr_min: float | None = None
    sr_max: float | None = None

    def __post_init__(self):
        ln_n = math.log(self.N)
        if not (-1e-10 <= self.b_min <= self.b_max <= ln_n + 1e-10):
            raise ValueError(
                f"invalid entropy bounds: 0 <= {self.b_min} <= {self.b_max} <= {ln_n}")
        lo, hi = 1.0 / (self.L * self.N), 1.0 / self.L
        if not (lo - 1e-10 <= self.p_min <= self.p_max <= hi + 1e-10):
            raise ValueError(
                f"invalid purity bounds: {lo} <= {self.p_min} <= {self.p_max} <= {hi}")

    def to_dict(self) -> dict:
        return asdict(self)


def maassen_uffink_bound(ms: MeasurementSet) -> float:
    """-ln max_ij |(U2 U1^dag)_ij|, a lower bound for (S1 + S2)/2."""
    if ms.L != 2:
        raise ValueError(f"Maassen-Uffink applies to exactly two bases, got L={ms.L}")
    overlap = ms.unitaries[1] @ ms.unitaries[0].conj().T
    return float(-np.log(np.max(np.abs(overlap))))


def m_matrix(ms: MeasurementSet, generators: np.ndarray | None = None) -> np.ndarray:
    """Purity matrix M_{j'j} = sum_{k,i} t_j'(k,i) t_j(k,i).

    t_j(k,i) = Tr(U_k^dag |i><i| U_k s_j) are the generator components of
    the rotated projectors.  Real symmetric positive semidefinite; its
    extreme eigenvalues drive the purity bounds.
    """
    sig = su_generators(ms.dim) if generators is None else np.asarray(generators)
    # row i of U_k conjugated is the state U_k^dag |i>
    vecs = ms.stack.conj()                       # (L, N, N): [k, i, :] = U_k^dag e_i
    t = np.einsum("kia,jab,kib->kij", vecs.conj(), sig, vecs).real
    m = np.einsum("kij,kil->jl", t, t)
    return (m + m.T) / 2.0


def purity_bounds(ms: MeasurementSet) -> tuple[float, float]:
    """(P_min, P_max) = 1/(LN) + (N-1)/(2NL^2) * extreme eigenvalues of M."""
    evals = np.linalg.eigvalsh(m_matrix(ms))
    n, L = ms.dim, ms.L
    scale = (n - 1.0) / (2.0 * n * L * L)
    base = 1.0 / (L * n)
    return base + scale * float(evals[0]), base + scale * float(evals[-1])


def _b_min_from_purity(L: int, p_max: float) -> float:
    c = L * p_max
    k = math.floor(1.0 / c)
    a = 1.0 / c - k
    return float(c * (a * (k + 1) * math.log(k + 1) + (1 - a) * xlogy(k, k)))


def _b_max_from_purity(L: int, n: int, p_min: float) -> tuple[float, float]:
    r = (L * n * p_min - 1.0) / (L * n - 1.0)
    r = min(max(r, 0.0), 1.0)  # fp noise can give r = -1e-17 at L = 2
    ln = L * n
    q = np.full(ln, (1.0 - math.sqrt(r)) / ln)
    q[0] = (1.0 + (ln - 1) * math.sqrt(r)) / ln
    return r, shannon_entropy(q) - math.log(L)


def _is_complete_mub(ms: MeasurementSet, tol: float = 1e-10) -> bool:
    if ms.L != ms.dim + 1:
        return False
    target = 1.0 / ms.dim
    for i in range(ms.L):
        for j in range(i + 1, ms.L):
            g = np.abs(ms.unitaries[i].conj().T @ ms.unitaries[j]) ** 2
            if np.max(np.abs(g - target)) > tol:
                return False
    return True


def certainty_uncertainty_bounds(ms: MeasurementSet) -> BoundsReport:
    """Full bounds report: purity-based B_min/B_max, plus Maassen-Uffink for
    L = 2 and the Sanchez-Ruiz pair when the set is a complete MUB family."""
    m = m_matrix(ms)
    evals = np.linalg.eigvalsh(m)
    n, L = ms.dim, ms.L
    scale = (n - 1.0) / (2.0 * n * L * L)
    p_min = 1.0 / (L * n) + scale * float(evals[0])
    p_max = 1.0 / (L * n) + scale * float(evals[-1])
    b_min = _b_min_from_purity(L, p_max)
    _, b_max = _b_max_from_purity(L, n, p_min)
    mu = maassen_uffink_bound(ms) if L == 2 else None
    sr = sanchez_ruiz_bounds(n) if _is_complete_mub(ms) else (None, None)
    return BoundsReport(
        L=L, N=n,
        m_min=float(evals[0]), m_max=float(evals[-1]),
        p_min=p_min, p_max=p_max,
        b_min=b_min, b_max=min(b_max, math.log(n)),
        maassen_uffink=mu, sr_min=sr[0], sr_max=sr[1],
    )


def sanchez_ruiz_bounds(n: int) -> tuple[float, float]:
    """(lower, upper) bounds on the MUB-averaged entropy for L = N + 1 bases.

    N = 2 is special: the generic upper-bound formula degenerates (its
    N - 2 denominator vanishes), and the tight dedicated constants
    (2/3) ln 2 and (1/2) ln 6 - ln(2 + sqrt 3)/(2 sqrt 3) are returned.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if n == 2:
        sr_min = (2.0 / 3.0) * math.log(2.0)
        sr_max = 0.5 * math.log(6.0) - math.log(2.0 + math.sqrt(3.0)) / (2.0 * math.sqrt(3.0))
        return sr_min, sr_max
    if n % 2 == 1:
        sr_min = math.log((n + 1) / 2.0)
    else:
        sr_min = (n / (2.0 * (n + 1))) * math.log(n / 2.0) \
            + ((n / 2.0 + 1) / (n + 1)) * math.log(n / 2.0 + 1)
    sr_max = math.log(n) + (n - 1) ** 2 * math.log(n - 1.0) / ((n + 1) * n * (n - 2))
    return sr_min, sr_max


def haar_mean_entropy(n: int) -> float:
    """Mean basis entropy of a Haar-random pure state: digamma(N+1) - digamma(2)."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    return float(digamma(n + 1) - digamma(2))
