"""Constructions and identity checks for conjugations and complex symmetric operators.

Every verifier returns a VerificationReport whose checked residuals are
Frobenius distances between the matrices of the two sides of an identity.
Operators are composed with ``conjugations.compose``, so an antilinear side
is only ever compared with another antilinear side.  When a stated identity
equates an antilinear map with a linear one, both sides are evaluated on a
fixed orthonormal basis of the relevant conjugation, which is where the
identity is derived.
"""
from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .conjugations import (
    Conjugation,
    adjoint,
    apply,
    canonical_conjugation,
    commutator_residual,
    compose,
    family_conjugation,
    fixed_basis,
    is_conjugation,
    operator_distance,
)
from .hardy import (
    ToleranceConfig,
    as_matrix,
    frobenius_distance,
    smallest_singular_value,
    unitarity_residual,
)
from .report import VerificationReport, build_report
from .symbols import Symbol, format_symbol, parse_symbol
from .toeplitz import csym_residual, min_dimension, toeplitz_matrix

__all__ = [
    "CHECK_IDS",
    "EXAMPLE_SYMBOL",
    "SPECTRUM_TOL",
    "intertwiner_from_conjugation",
    "intertwining_residual",
    "verify_intertwiner",
    "conjugation_from_isomorphism",
    "verify_conjugation_from_unitary",
    "transport_operator",
    "spectral_mismatch",
    "verify_transport",
    "verify_intertwiner_rigidity",
    "check_symmetric_equivalence",
    "symmetrizer",
    "make_doubly_symmetric",
    "verify_double_symmetry_relations",
    "verify_fixed_basis_transpose",
    "verify_commutation_converse",
    "verify_toeplitz_relation_equivalence",
    "verify_example_trio",
]

CHECK_IDS = ("T2.1", "P2.2", "R2.3", "C2.4", "T2.5", "R2.6", "EX", "P-CONVERSE", "C2.8")

EXAMPLE_SYMBOL = "z^2 + zbar^2"

# Matching eigenvalues of a non-normal matrix loses a few digits.
SPECTRUM_TOL = 1e-8
# |csym_residual(A, C_1) - ||A - A^t||_F| is exact up to rounding.
EQUIVALENCE_GAP_TOL = 1e-13


def _require_conjugation(c: Conjugation, tol: ToleranceConfig, name: str = "C"):
    check = is_conjugation(c, tol)
    if not check.passed:
        raise ValueError(f"{name} is not a conjugation: residuals {check.residuals}")


def _require_symmetric(t, c: Conjugation, tol: ToleranceConfig, name: str) -> float:
    r = csym_residual(t, c)
    if r > tol.identity_tol:
        raise ValueError(f"operator is not {name}-symmetric: residual {r:.3e} > {tol.identity_tol:.1e}")
    return r


def _require_commuting(c: Conjugation, j: Conjugation, tol: ToleranceConfig):
    r = commutator_residual(c, j)
    if r > tol.identity_tol:
        raise ValueError(f"C and J do not commute: residual {r:.3e} > {tol.identity_tol:.1e}")


def _pair_parameters(t, c: Conjugation, j: Conjugation) -> dict:
    return {"dimension": as_matrix(t).shape[0], "C": c.label, "J": j.label}


# --- intertwiners and the conjugations they induce --------------------------


def intertwiner_from_conjugation(c: Conjugation, tol: ToleranceConfig | None = None) -> np.ndarray:
    """Unitary T with T C = C_1 T, sending a C-fixed orthonormal basis onto e_0, e_1, ...

    T = F* for F = fixed_basis(C).
    """
    f = fixed_basis(c, tol)
    return f.conj().T


def intertwining_residual(t, c: Conjugation) -> float:
    """||T M_C - conj(T)||_F, the distance between T C and C_1 T."""
    t = as_matrix(t)
    return operator_distance(compose(t, c), compose(canonical_conjugation(t.shape[0]), t))


def conjugation_from_isomorphism(t, tol: ToleranceConfig | None = None) -> Conjugation:
    """T* C_1 T for a unitary T; its matrix is T* conj(T)."""
    tol = tol or ToleranceConfig()
    t = as_matrix(t)
    r = unitarity_residual(t)
    if r > tol.identity_tol:
        raise ValueError(f"T is not unitary: ||T T* - I||_F = {r:.3e} > {tol.identity_tol:.1e}")
    m = compose(adjoint(t), canonical_conjugation(t.shape[0]), t).matrix
    return Conjugation(m, label="induced(T* C_1 T)")


def verify_intertwiner(c: Conjugation, tol: ToleranceConfig | None = None) -> VerificationReport:
    tol = tol or ToleranceConfig()
    t = intertwiner_from_conjugation(c, tol)
    back = conjugation_from_isomorphism(t, tol)
    residuals = {
        "unitarity": unitarity_residual(t),
        "intertwining": intertwining_residual(t, c),
        "round_trip": frobenius_distance(back.matrix, c.matrix),
    }
    tolerances = {
        "unitarity": tol.identity_tol,
        "intertwining": tol.identity_tol,
        "round_trip": 10 * tol.identity_tol,
    }
    return build_report("intertwiner", {"dimension": c.dim, "C": c.label}, residuals, tolerances)


def verify_conjugation_from_unitary(t, tol: ToleranceConfig | None = None) -> VerificationReport:
    tol = tol or ToleranceConfig()
    c = conjugation_from_isomorphism(t, tol)
    check = is_conjugation(c, tol)
    return build_report(
        "conjugation_from_unitary",
        {"dimension": c.dim},
        check.residuals,
        check.tolerances,
    )


# --- transport to the canonical conjugation ---------------------------------


def transport_operator(a, t, tol: ToleranceConfig | None = None) -> np.ndarray:
    """T A T*, the unitary transport of A."""
    tol = tol or ToleranceConfig()
    a, t = as_matrix(a), as_matrix(t)
    if a.shape != t.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {t.shape}")
    r = unitarity_residual(t)
    if r > tol.identity_tol:
        raise ValueError(f"T is not unitary: ||T T* - I||_F = {r:.3e}")
    return t @ a @ t.conj().T


def spectral_mismatch(a, b) -> float:
    """Largest eigenvalue distance under the best one-to-one matching."""
    ea = np.linalg.eigvals(as_matrix(a))
    eb = np.linalg.eigvals(as_matrix(b))
    cost = np.abs(ea[:, None] - eb[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def verify_transport(a, c: Conjugation, tol: ToleranceConfig | None = None) -> VerificationReport:
    """A C-symmetric A becomes a symmetric matrix after transport by the intertwiner of C."""
    tol = tol or ToleranceConfig()
    r0 = _require_symmetric(a, c, tol, "C")
    t = intertwiner_from_conjugation(c, tol)
    b = transport_operator(a, t, tol)
    residuals = {
        "input_symmetry": r0,
        "transported_symmetry": frobenius_distance(b, b.T),
        "spectrum": spectral_mismatch(a, b),
    }
    tolerances = {"transported_symmetry": 10 * tol.identity_tol, "spectrum": SPECTRUM_TOL}
    return build_report("transport", {"dimension": c.dim, "C": c.label}, residuals, tolerances)


def verify_intertwiner_rigidity(c: Conjugation, tol: ToleranceConfig | None = None) -> VerificationReport:
    """If the intertwiner T of C commutes with C_1 or with C, then C = C_1.

    From T M_C = conj(T) + E and a commutation defect D, ||M_C - I||_F is at
    most ||E||_F + ||D||_F; the check fails only if an antecedent holds and
    this bound is violated.
    """
    tol = tol or ToleranceConfig()
    _require_conjugation(c, tol)
    t = intertwiner_from_conjugation(c, tol)
    c1 = canonical_conjugation(c.dim)
    e = intertwining_residual(t, c)
    d_c1 = operator_distance(compose(t, c1), compose(c1, t))
    d_c = operator_distance(compose(t, c), compose(c, t))
    distance = frobenius_distance(c.matrix, np.eye(c.dim))
    violation = 0.0
    for d in (d_c1, d_c):
        if d <= tol.identity_tol:
            violation = max(violation, distance - (e + d + tol.identity_tol))
    residuals = {
        "commutes_with_c1": d_c1,
        "commutes_with_c": d_c,
        "distance_to_c1": distance,
        "implication_violation": max(violation, 0.0),
    }
    antecedent = min(d_c1, d_c) <= tol.identity_tol
    notes = "antecedent holds" if antecedent else "antecedent false; implication holds vacuously"
    return build_report(
        "intertwiner_rigidity",
        {"dimension": c.dim, "C": c.label},
        residuals,
        {"implication_violation": 0.0},
        notes,
    )


# --- canonical conjugation and matrix symmetry -------------------------------


def check_symmetric_equivalence(a, tol: ToleranceConfig | None = None) -> VerificationReport:
    """C_1-symmetry residual of A against ||A - A^t||_F; the two are equal for every A."""
    tol = tol or ToleranceConfig()
    a = as_matrix(a)
    r1 = csym_residual(a, canonical_conjugation(a.shape[0]))
    r2 = frobenius_distance(a, a.T)
    symmetric = r1 <= tol.identity_tol and r2 <= tol.identity_tol
    return build_report(
        "symmetric_equivalence",
        {"dimension": a.shape[0]},
        {"csym_c1": r1, "transpose": r2, "gap": abs(r1 - r2)},
        {"gap": EQUIVALENCE_GAP_TOL},
        f"c1_symmetric={symmetric}",
    )


# --- pairs of commuting conjugations -----------------------------------------


def symmetrizer(a, c: Conjugation) -> np.ndarray:
    """S_C(A) = M_C A^t conj(M_C), the matrix of C A* C.  Its fixed points are the C-symmetric A."""
    return compose(c, adjoint(as_matrix(a)), c)


def make_doubly_symmetric(a, c: Conjugation, j: Conjugation, tol: ToleranceConfig | None = None) -> np.ndarray:
    """Average of A over the group generated by S_C and S_J."""
    tol = tol or ToleranceConfig()
    _require_commuting(c, j, tol)
    a = as_matrix(a)
    sj = symmetrizer(a, j)
    return (a + symmetrizer(a, c) + sj + symmetrizer(sj, c)) / 4


def verify_double_symmetry_relations(
    t, c: Conjugation, j: Conjugation, tol: ToleranceConfig | None = None
) -> VerificationReport:
    """Relations claimed for an operator that is C- and J-symmetric with CJ = JC.

    (a) T*C = JTJ and (b) T*J = CTC compare antilinear with linear maps and
    are evaluated on C-fixed and J-fixed orthonormal bases respectively;
    (c) CT = JT and (d) CT = T*J compare antilinear matrices directly.
    """
    tol = tol or ToleranceConfig()
    t = as_matrix(t)
    _require_symmetric(t, c, tol, "C")
    _require_symmetric(t, j, tol, "J")
    _require_commuting(c, j, tol)
    ts = adjoint(t)
    fc, fj = fixed_basis(c, tol), fixed_basis(j, tol)
    residuals = {
        "adjoint_c_eq_jtj": frobenius_distance(apply(compose(ts, c), fc), apply(compose(j, t, j), fc)),
        "adjoint_j_eq_ctc": frobenius_distance(apply(compose(ts, j), fj), apply(compose(c, t, c), fj)),
        "ct_eq_jt": operator_distance(compose(c, t), compose(j, t)),
        "ct_eq_adjoint_j": operator_distance(compose(c, t), compose(ts, j)),
    }
    return build_report(
        "double_symmetry_relations",
        _pair_parameters(t, c, j),
        residuals,
        {k: tol.identity_tol for k in residuals},
    )


def verify_fixed_basis_transpose(
    t, c: Conjugation, j: Conjugation, tol: ToleranceConfig | None = None
) -> VerificationReport:
    """Compare G[n, m] = <T f_m, f_n> with H[m, n] = <(TJ) f_n, f_m> on a C-fixed basis f.

    ``fixed_basis_symmetry`` = ||G - G^t||_F is reported alongside as a diagnostic.
    """
    tol = tol or ToleranceConfig()
    t = as_matrix(t)
    _require_symmetric(t, c, tol, "C")
    _require_symmetric(t, j, tol, "J")
    _require_commuting(c, j, tol)
    f = fixed_basis(c, tol)
    fh = f.conj().T
    g = fh @ t @ f
    h = fh @ apply(compose(t, j), f)
    residuals = {
        "transpose_relation": frobenius_distance(g, h.T),
        "fixed_basis_symmetry": frobenius_distance(g, g.T),
    }
    return build_report(
        "fixed_basis_transpose",
        _pair_parameters(t, c, j),
        residuals,
        {"transpose_relation": 10 * tol.identity_tol},
    )


def verify_commutation_converse(
    t, c: Conjugation, j: Conjugation, tol: ToleranceConfig | None = None
) -> VerificationReport:
    """If T is C- and J-symmetric, CT = T*J and T is injective, then CJ = JC.

    T (CJ - JC) is bounded by twice the sum of the input residuals, so the
    commutator may be as large as that sum amplified by 1 / sigma_min(T).
    Unmet hypotheses (relation or injectivity) give an inconclusive report.
    """
    tol = tol or ToleranceConfig()
    t = as_matrix(t)
    rc = _require_symmetric(t, c, tol, "C")
    rj = _require_symmetric(t, j, tol, "J")
    relation = operator_distance(compose(c, t), compose(adjoint(t), j))
    sigma = smallest_singular_value(t)
    commutator = commutator_residual(c, j)
    residuals = {
        "csym_c": rc,
        "csym_j": rj,
        "relation": relation,
        "sigma_min": sigma,
        "commutator": commutator,
    }
    params = _pair_parameters(t, c, j)
    if sigma <= tol.injectivity_threshold:
        return build_report(
            "commutation_converse", params, residuals, {},
            f"T not injective on the truncation (sigma_min={sigma:.3e})", inconclusive=True,
        )
    if relation > tol.identity_tol:
        return build_report(
            "commutation_converse", params, residuals, {},
            f"hypothesis CT = T*J unmet (residual {relation:.3e})", inconclusive=True,
        )
    bound = 2 * (rc + rj + relation) / sigma + tol.identity_tol
    return build_report(
        "commutation_converse", params, residuals, {"commutator": bound},
        f"amplification 1/sigma_min = {1 / sigma:.3e}",
    )


def verify_toeplitz_relation_equivalence(
    phi: Symbol, c: Conjugation, j: Conjugation, n: int, tol: ToleranceConfig | None = None
) -> VerificationReport:
    """For a Toeplitz truncation that is C- and J-symmetric: CT = T*J iff CJ = JC.

    The injectivity that makes this work for the full operator has no
    finite-section analogue; sigma_min of A and A* are recorded instead.
    """
    tol = tol or ToleranceConfig()
    if n < min_dimension(phi):
        raise ValueError(
            f"dimension {n} too small for symbol bandwidth {phi.bandwidth}; need n >= {min_dimension(phi)}"
        )
    if c.dim != n or j.dim != n:
        raise ValueError(f"conjugations must be {n}-dimensional")
    a = toeplitz_matrix(phi, n)
    _require_symmetric(a, c, tol, "C")
    _require_symmetric(a, j, tol, "J")
    relation = operator_distance(compose(c, a), compose(adjoint(a), j))
    commutator = commutator_residual(c, j)
    agree = (relation <= tol.identity_tol) == (commutator <= tol.identity_tol)
    residuals = {
        "relation": relation,
        "commutator": commutator,
        "equivalence_violation": 0.0 if agree else max(relation, commutator),
    }
    s_a = smallest_singular_value(a)
    s_as = smallest_singular_value(a.conj().T)
    notes = (
        f"sigma_min(A)={s_a:.6e} sigma_min(A*)={s_as:.6e}; "
        "injectivity of the full Toeplitz operator is not certified by a finite section"
    )
    params = {"dimension": n, "symbol": format_symbol(phi), "C": c.label, "J": j.label}
    return build_report(
        "toeplitz_relation_equivalence", params, residuals, {"equivalence_violation": tol.identity_tol}, notes
    )


def verify_example_trio(n: int = 8, tol: ToleranceConfig | None = None) -> VerificationReport:
    """phi = z^2 + zbar^2 against C_1 and C_-1: both symmetries and T = C_1 T* C_-1."""
    tol = tol or ToleranceConfig()
    phi = parse_symbol(EXAMPLE_SYMBOL)
    if n < min_dimension(phi):
        raise ValueError(f"dimension {n} too small; need n >= {min_dimension(phi)}")
    a = toeplitz_matrix(phi, n)
    c1 = canonical_conjugation(n)
    cm1 = family_conjugation(1, -1, n)
    residuals = {
        "csym_c1": csym_residual(a, c1),
        "csym_cminus1": csym_residual(a, cm1),
        "two_sided": operator_distance(a, compose(c1, adjoint(a), cm1)),
    }
    return build_report(
        "example_trio",
        {"dimension": n, "symbol": EXAMPLE_SYMBOL, "C": c1.label, "J": cm1.label},
        residuals,
        {k: tol.identity_tol for k in residuals},
    )
