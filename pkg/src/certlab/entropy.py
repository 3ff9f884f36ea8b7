"""Entropy functionals, rescaled probabilities, purity and l1-coherence.

Natural logarithms throughout; a CLI flag rescales display output to bits
but never the values computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import xlogy

from .qstate import validate_state, validate_unitary

__all__ = [
    "MeasurementSet",
    "shannon_entropy",
    "tsallis_entropy",
    "average_entropy",
    "purity_coefficient",
    "l1_coherence",
    "coherence_error_bound",
]

_PROB_SUM_TOL = 1e-9
_PROB_NEG_TOL = 1e-9


@dataclass(frozen=True)
class MeasurementSet:
    """Ordered collection {U_1 = identity, ..., U_L} of same-dimension bases."""

    dim: int
    unitaries: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.unitaries) < 1:
            raise ValueError("a MeasurementSet needs at least one basis")
        mats = []
        for k, u in enumerate(self.unitaries):
            u = validate_unitary(u, name=f"U_{k + 1}")
            if u.shape[0] != self.dim:
                raise ValueError(f"U_{k + 1} has dim {u.shape[0]}, expected {self.dim}")
            u = u.copy()
            u.setflags(write=False)
            mats.append(u)
        if np.max(np.abs(mats[0] - np.eye(self.dim))) > 1e-12:
            raise ValueError("the first basis must be the identity")
        object.__setattr__(self, "unitaries", tuple(mats))
        stacked = np.array(mats)
        stacked.setflags(write=False)
        object.__setattr__(self, "_stack", stacked)

    @classmethod
    def from_unitaries(cls, unitaries) -> "MeasurementSet":
        unitaries = tuple(unitaries)
        return cls(dim=np.asarray(unitaries[0]).shape[0], unitaries=unitaries)

    @property
    def L(self) -> int:
        return len(self.unitaries)

    @property
    def stack(self) -> np.ndarray:
        """(L, N, N) read-only view of the bases."""
        return self._stack


def _as_probs(p) -> np.ndarray:
    p = np.asarray(p, dtype=float).reshape(-1)
    if np.min(p) < -_PROB_NEG_TOL:
        raise ValueError(f"negative probability {np.min(p)}")
    p = np.where(p < 0.0, 0.0, p)
    s = p.sum()
    if abs(s - 1.0) > _PROB_SUM_TOL:
        raise ValueError(f"probabilities sum to {s}, not 1")
    return p / s


def shannon_entropy(p) -> float:
    """Shannon entropy -sum p ln p in nats, with 0 ln 0 = 0."""
    p = _as_probs(p)
    p = np.where(p < 1e-15, 0.0, p)
    return float(-xlogy(p, p).sum())


def tsallis_entropy(p, beta: float) -> float:
    """Tsallis entropy (1 - sum p^beta) / (beta - 1) for beta > 0, beta != 1."""
    if beta <= 0 or beta == 1:
        raise ValueError(f"beta must be positive and != 1, got {beta}"
                         " (use shannon_entropy for the beta -> 1 limit)")
    p = _as_probs(p)
    return float((1.0 - np.sum(p ** beta)) / (beta - 1.0))


def _prob_table(psi: np.ndarray, ms: MeasurementSet) -> np.ndarray:
    """(L, N) table of outcome probabilities for every basis."""
    amp = ms.stack @ psi
    p = (amp.conj() * amp).real
    np.clip(p, 0.0, None, out=p)
    return p / p.sum(axis=1, keepdims=True)


def average_entropy(psi, ms: MeasurementSet) -> float:
    """(1/L) sum_j S(p^(j)) in nats; lies in [0, ln N]."""
    psi = validate_state(psi)
    if psi.size != ms.dim:
        raise ValueError(f"state dim {psi.size} does not match set dim {ms.dim}")
    p = _prob_table(psi, ms)
    return float(-xlogy(p, p).sum() / ms.L)


def average_entropy_batch(states: np.ndarray, ms: MeasurementSet) -> np.ndarray:
    """Vectorized average entropy for an (S, N) batch of unit vectors."""
    amp = np.einsum("lab,sb->lsa", ms.stack, states)
    p = (amp.conj() * amp).real
    return -xlogy(p, p).sum(axis=(0, 2)) / ms.L


def purity_coefficient(psi, ms: MeasurementSet) -> float:
    """P = sum_{k,i} (p_i^(k)/L)^2, always within [1/(LN), 1/L]."""
    psi = validate_state(psi)
    if psi.size != ms.dim:
        raise ValueError(f"state dim {psi.size} does not match set dim {ms.dim}")
    p = _prob_table(psi, ms) / ms.L
    return float(np.sum(p * p))


def l1_coherence(psi) -> float:
    """l1-norm of coherence of a pure state, (sum_i |psi_i|)^2 - 1."""
    psi = validate_state(psi)
    return float(np.abs(psi).sum() ** 2 - 1.0)


def coherence_error_bound(dim: int, eps: float, kind: str) -> float:
    """Lower bound on the l1-coherence of an imperfect maximally coherent state.

    kind="overlap": squared-overlap deficit eps in [0, 1] gives the linear
    bound N - 1 - eps N.  kind="phase": per-component phase mismatch of at
    most eps radians gives N - 1 - N sin^2(eps) for even N and
    N - 1 - N c_N sin^2(eps) with c_N = 1 - 1/N^2 for odd N, clamped at 0.
    """
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    if kind == "overlap":
        if not 0.0 <= eps <= 1.0:
            raise ValueError(f"overlap error must be in [0, 1], got {eps}")
        return dim - 1.0 - eps * dim
    if kind == "phase":
        if eps < 0.0:
            raise ValueError(f"phase error must be >= 0, got {eps}")
        c = 1.0 if dim % 2 == 0 else 1.0 - 1.0 / dim**2
        return max(dim - 1.0 - dim * c * np.sin(eps) ** 2, 0.0)
    raise ValueError(f"kind must be 'overlap' or 'phase', got {kind!r}")
