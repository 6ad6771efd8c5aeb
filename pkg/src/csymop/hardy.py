"""Finite model of the Hardy space H^2 and the dense linear algebra on it.

A vector of the truncated space H^2_N = span{1, z, ..., z^(N-1)} is stored as
its length-N complex coefficient array; an operator is the N x N matrix whose
entry (j, k) is <A e_k, e_j>.  The inner product is conjugate-linear in the
second argument, and every adjoint in the package follows from that choice.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ToleranceConfig",
    "as_vector",
    "as_matrix",
    "basis_vector",
    "inner_product",
    "random_unitary",
    "smallest_singular_value",
    "frobenius_distance",
    "unitarity_residual",
]


@dataclass(frozen=True)
class ToleranceConfig:
    identity_tol: float = 1e-10
    injectivity_threshold: float = 1e-6
    basis_degeneracy_threshold: float = 1e-8

    def __post_init__(self):
        for name in ("identity_tol", "injectivity_threshold", "basis_degeneracy_threshold"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")


def as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=complex)
    if v.ndim != 1 or v.size == 0:
        raise ValueError(f"expected a nonempty 1-d coefficient array, got shape {v.shape}")
    return v


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"expected a nonempty square matrix, got shape {m.shape}")
    return m


def basis_vector(k: int, n: int) -> np.ndarray:
    """Coefficient array of z^k in H^2_n."""
    if not 0 <= k < n:
        raise ValueError(f"basis index {k} outside 0..{n - 1}")
    e = np.zeros(n, dtype=complex)
    e[k] = 1.0
    return e


def inner_product(f, g) -> complex:
    """Return sum_k f_k * conj(g_k)."""
    f, g = as_vector(f), as_vector(g)
    if f.shape != g.shape:
        raise ValueError(f"dimension mismatch: {f.size} vs {g.size}")
    return complex(np.vdot(g, f))


def random_unitary(n: int, seed: int) -> np.ndarray:
    """Haar-distributed n x n unitary, deterministic in ``seed``.

    QR of a complex Ginibre matrix, with the phases of R's diagonal pushed
    into Q so the distribution is invariant under left multiplication.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    phases = d / np.abs(d)
    return q * phases[np.newaxis, :]


def smallest_singular_value(a) -> float:
    a = as_matrix(a)
    return float(np.linalg.svd(a, compute_uv=False).min())


def frobenius_distance(a, b) -> float:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def unitarity_residual(u) -> float:
    """||U U* - I||_F."""
    u = as_matrix(u)
    return frobenius_distance(u @ u.conj().T, np.eye(u.shape[0]))
