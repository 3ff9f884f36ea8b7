"""States, unitaries, SU(N) generators, Bloch vectors and Haar sampling.

All vectors and matrices are plain complex numpy arrays.  Construction
helpers validate the defining invariants (unit norm, unitarity) and the
stochastic samplers take an explicit seed so that every downstream figure
is bit-reproducible.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "NORM_TOL",
    "UNITARY_TOL",
    "rng_from",
    "validate_state",
    "validate_unitary",
    "haar_state",
    "haar_unitary",
    "su_generators",
    "bloch_vector",
    "bloch_constraint_residual",
    "density_from_bloch",
    "measurement_probs",
]

NORM_TOL = 1e-12
UNITARY_TOL = 1e-10

# probabilities in [-CLAMP_TOL, 0) are treated as exact zeros
CLAMP_TOL = 1e-14


def rng_from(seed) -> np.random.Generator:
    """Generator from an int seed, a seed sequence or an existing Generator.

    Derived streams are obtained by seeding with ``(seed, stream_index)``
    tuples; independent callers must use distinct tuples.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def validate_state(psi, name: str = "state") -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if psi.size < 2:
        raise ValueError(f"{name}: dimension must be >= 2, got {psi.size}")
    norm_sq = float(np.vdot(psi, psi).real)
    if abs(norm_sq - 1.0) > 1e-9:
        raise ValueError(f"{name}: squared norm {norm_sq} is not 1")
    return psi / np.sqrt(norm_sq)


def validate_unitary(u, name: str = "unitary") -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"{name}: expected a square matrix, got shape {u.shape}")
    n = u.shape[0]
    defect = np.max(np.abs(u.conj().T @ u - np.eye(n)))
    if defect > UNITARY_TOL:
        raise ValueError(f"{name}: unitarity defect {defect:.3e} exceeds {UNITARY_TOL}")
    return u


def haar_state(dim: int, seed=0) -> np.ndarray:
    """Haar-random pure state: normalized complex standard-normal vector."""
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    rng = rng_from(seed)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def haar_states(dim: int, count: int, seed=0) -> np.ndarray:
    """(count, dim) array of independent Haar states from one stream."""
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    rng = rng_from(seed)
    z = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def haar_unitary(dim: int, seed=0) -> np.ndarray:
    """Haar-random unitary via QR of a Ginibre matrix with phase correction.

    The diagonal of R is rotated to the positive real axis so the
    distribution of Q is exactly the Haar measure (Mezzadri's recipe).
    """
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    rng = rng_from(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def su_generators(dim: int) -> np.ndarray:
    """Generalized Gell-Mann matrices, shape (dim^2 - 1, dim, dim).

    Normalization Tr(s_i s_j) = 2 delta_ij.  Fixed ordering: symmetric
    off-diagonal pairs in lexicographic (j, k) order with j < k, then the
    antisymmetric pairs in the same order, then the diagonal matrices.
    For dim = 2 this is exactly (sigma_x, sigma_y, sigma_z).
    """
    if dim < 2:
        raise ValueError(f"dimension must be >= 2, got {dim}")
    gens = []
    for j in range(dim):
        for k in range(j + 1, dim):
            m = np.zeros((dim, dim), dtype=complex)
            m[j, k] = 1.0
            m[k, j] = 1.0
            gens.append(m)
    for j in range(dim):
        for k in range(j + 1, dim):
            m = np.zeros((dim, dim), dtype=complex)
            m[j, k] = -1j
            m[k, j] = 1j
            gens.append(m)
    for l in range(1, dim):
        diag = np.zeros(dim)
        diag[:l] = 1.0
        diag[l] = -l
        gens.append(np.diag(diag * np.sqrt(2.0 / (l * (l + 1)))).astype(complex))
    return np.array(gens)


def bloch_vector(psi) -> np.ndarray:
    """Normalized Bloch vector of a pure state, x_i with x.x = 1.

    x_i = Tr(|psi><psi| s_i) / sqrt(2(N-1)/N) in the generator ordering of
    :func:`su_generators`.
    """
    psi = validate_state(psi)
    n = psi.size
    sig = su_generators(n)
    raw = np.einsum("a,iab,b->i", psi.conj(), sig, psi).real
    return raw / np.sqrt(2.0 * (n - 1) / n)


def bloch_constraint_residual(x, dim: int) -> float:
    """Max-norm residual of the quadratic pure-state constraint.

    Pure states satisfy, componentwise over the generator index,
    sqrt(N(N-1)/2) Tr((x.s)^2 s_i) = 2(N-2) x_i.
    """
    x = np.asarray(x, dtype=float)
    sig = su_generators(dim)
    xs = np.tensordot(x, sig, axes=(0, 0))
    lhs = np.sqrt(dim * (dim - 1) / 2.0) * np.einsum("ab,bc,ica->i", xs, xs, sig).real
    return float(np.max(np.abs(lhs - 2.0 * (dim - 2) * x)))


def density_from_bloch(x, dim: int) -> np.ndarray:
    """rho = (1/N)(I + sqrt(N(N-1)/2) sum_i x_i s_i)."""
    sig = su_generators(dim)
    xs = np.tensordot(np.asarray(x, dtype=float), sig, axes=(0, 0))
    return (np.eye(dim) + np.sqrt(dim * (dim - 1) / 2.0) * xs) / dim


def _clamp_probs(p: np.ndarray) -> np.ndarray:
    if np.min(p) < -CLAMP_TOL:
        raise ValueError(f"negative probability {np.min(p)} below clamp tolerance")
    p = np.where(p < 0.0, 0.0, p)
    return p / p.sum()


def measurement_probs(psi, basis) -> np.ndarray:
    """Outcome distribution p_i = |<i|U|psi>|^2 of measuring in basis U.

    Entries in [-1e-14, 0) are clamped to zero and the vector is
    renormalized, so floating-point noise cannot break entropy evaluation.
    """
    psi = validate_state(psi)
    basis = np.asarray(basis, dtype=complex)
    if basis.shape != (psi.size, psi.size):
        raise ValueError(f"shape mismatch: state dim {psi.size}, basis {basis.shape}")
    amp = basis @ psi
    return _clamp_probs((amp.conj() * amp).real)
