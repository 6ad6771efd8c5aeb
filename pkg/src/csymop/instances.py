"""Seeded generators of test instances for the verifiers."""
from __future__ import annotations

import numpy as np

from .conjugations import Conjugation, family_conjugation
from .hardy import ToleranceConfig, random_unitary
from .symbols import Symbol

__all__ = [
    "PAIR_KINDS",
    "trial_seed",
    "random_matrix",
    "random_commuting_pair",
    "commuting_pair",
    "doubly_symmetric_instance",
    "toeplitz_pair_instance",
]

PAIR_KINDS = ("same", "opposite", "random")


def trial_seed(seed: int, trial: int) -> int:
    """Independent 32-bit seed for trial ``trial`` of a run seeded with ``seed``."""
    return int(np.random.SeedSequence([seed, trial]).generate_state(1)[0])


def random_matrix(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)


def random_commuting_pair(n: int, seed: int) -> tuple[Conjugation, Conjugation]:
    """Commuting conjugations with no special relation to the canonical basis.

    C = F F^t and J = F (O D O^t) F^t for a Haar unitary F, a real orthogonal
    O and a diagonal of signs D.  The columns of F are C-fixed, and in that
    frame J is the real symmetric orthogonal O D O^t, which commutes with C_1.
    """
    rng = np.random.default_rng(seed)
    f = random_unitary(n, int(rng.integers(2**32)))
    o, r = np.linalg.qr(rng.standard_normal((n, n)))
    o = o * np.sign(np.diagonal(r))[np.newaxis, :]
    signs = rng.choice([-1.0, 1.0], size=n)
    inner = (o * signs[np.newaxis, :]) @ o.T
    c = Conjugation(f @ f.T, label=f"random-commuting-C(seed={seed})")
    j = Conjugation(f @ inner @ f.T, label=f"random-commuting-J(seed={seed})")
    return c, j


def commuting_pair(kind: str, n: int, seed: int) -> tuple[Conjugation, Conjugation]:
    """A commuting pair of the given kind.

    ``same``: (C_lam, C_lam); ``opposite``: (C_lam, C_-lam) with lam uniform on
    the circle; ``random``: see random_commuting_pair.
    """
    if kind == "random":
        return random_commuting_pair(n, seed)
    rng = np.random.default_rng(seed)
    lam = np.exp(2j * np.pi * rng.random())
    if kind == "same":
        return family_conjugation(1, lam, n), family_conjugation(1, lam, n)
    if kind == "opposite":
        return family_conjugation(1, lam, n), family_conjugation(1, -lam, n)
    raise ValueError(f"unknown pair kind {kind!r}; expected one of {PAIR_KINDS}")


def doubly_symmetric_instance(
    n: int, seed: int, kind: str, tol: ToleranceConfig | None = None
) -> tuple[np.ndarray, Conjugation, Conjugation]:
    """(T, C, J) with (C, J) commuting and T both C- and J-symmetric."""
    from .theorems import make_doubly_symmetric

    c, j = commuting_pair(kind, n, seed)
    a = random_matrix(n, trial_seed(seed, 1))
    return make_doubly_symmetric(a, c, j, tol), c, j


def toeplitz_pair_instance(n: int, seed: int, kind: str, bandwidth: int = 3):
    """(phi, C, J) with T_phi both C- and J-symmetric for a family pair.

    For C_lam the Toeplitz truncation is symmetric iff
    phi_hat(-d) = lam^d phi_hat(d); a symbol symmetric for both C_lam and
    C_rho may only use degrees d with lam^d = rho^d.

    ``same``: rho = lam, any degree.  ``opposite``: rho = -lam, even degrees.
    ``quarter``: rho = i lam (a non-commuting pair), degrees divisible by 4.
    """
    rng = np.random.default_rng(seed)
    lam = np.exp(2j * np.pi * rng.integers(8) / 8)
    step = {"same": 1, "opposite": 2, "quarter": 4}
    rho = {"same": lam, "opposite": -lam, "quarter": 1j * lam}
    if kind not in step:
        raise ValueError(f"unknown symbol pair kind {kind!r}; expected one of {tuple(step)}")
    degrees = [d for d in range(0, max(bandwidth, step[kind]) + 1) if d % step[kind] == 0]
    coeffs: dict[int, complex] = {}
    for d in degrees:
        c = complex(rng.standard_normal(), rng.standard_normal())
        coeffs[d] = c
        if d:
            coeffs[-d] = lam**d * c
    phi = Symbol(coeffs)
    return phi, family_conjugation(1, lam, n), family_conjugation(1, rho[kind], n)
