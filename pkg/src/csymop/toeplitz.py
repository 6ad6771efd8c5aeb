"""Toeplitz truncations and complex-symmetry residuals."""
from __future__ import annotations

import numpy as np

from .conjugations import AntilinearMap, adjoint, compose, operator_distance
from .hardy import ToleranceConfig, as_matrix, smallest_singular_value
from .symbols import Symbol

__all__ = [
    "toeplitz_matrix",
    "csym_residual",
    "injectivity_proxy",
    "family_symmetry_defect",
    "min_dimension",
]


def toeplitz_matrix(phi: Symbol, n: int) -> np.ndarray:
    """n x n compression of f -> P(phi f); entry (j, k) is phi_hat(j - k)."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    a = np.zeros((n, n), dtype=complex)
    for degree, c in phi.coefficients.items():
        if abs(degree) < n:
            a += c * np.eye(n, k=-degree)
    return a


def min_dimension(phi: Symbol) -> int:
    """Smallest truncation that captures every band of phi with headroom."""
    return 2 * phi.bandwidth + 2


def csym_residual(a, c: AntilinearMap) -> float:
    """||M_C conj(A) - A* M_C||_F: distance between the antilinear maps CA and A*C."""
    a = as_matrix(a)
    if a.shape != c.matrix.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {c.matrix.shape}")
    return operator_distance(compose(c, a), compose(adjoint(a), c))


def injectivity_proxy(a, tol: ToleranceConfig | None = None) -> tuple[bool, float]:
    tol = tol or ToleranceConfig()
    s = smallest_singular_value(a)
    return s > tol.injectivity_threshold, s


def family_symmetry_defect(phi: Symbol, lam: complex, n: int | None = None) -> float:
    """Coefficient-level test of C_{mu,lam}-symmetry of a Toeplitz truncation.

    For the diagonal family the entrywise condition reduces to
    phi_hat(-d) = lam^d phi_hat(d) on every captured diagonal |d| < n;
    returns the largest violation (zero iff the condition holds).
    """
    support = {abs(k) for k in phi.coefficients}
    if n is not None:
        support = {d for d in support if d < n}
    return max((abs(phi[-d] - lam**d * phi[d]) for d in support), default=0.0)
