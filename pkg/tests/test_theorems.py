import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from csymop.conjugations import (
    adjoint,
    canonical_conjugation,
    commutator_residual,
    compose,
    family_conjugation,
    is_conjugation,
    random_conjugation,
)
from csymop.hardy import ToleranceConfig, frobenius_distance, random_unitary, unitarity_residual
from csymop.instances import (
    PAIR_KINDS,
    doubly_symmetric_instance,
    random_commuting_pair,
    random_matrix,
    toeplitz_pair_instance,
)
from csymop.symbols import parse_symbol
from csymop.theorems import (
    EXAMPLE_SYMBOL,
    check_symmetric_equivalence,
    conjugation_from_isomorphism,
    intertwiner_from_conjugation,
    intertwining_residual,
    make_doubly_symmetric,
    spectral_mismatch,
    symmetrizer,
    transport_operator,
    verify_commutation_converse,
    verify_conjugation_from_unitary,
    verify_double_symmetry_relations,
    verify_example_trio,
    verify_fixed_basis_transpose,
    verify_intertwiner,
    verify_intertwiner_rigidity,
    verify_toeplitz_relation_equivalence,
    verify_transport,
)
from csymop.toeplitz import csym_residual, toeplitz_matrix

seeds = st.integers(0, 2**32 - 1)
EXAMPLE = parse_symbol(EXAMPLE_SYMBOL)


def example_trio(n):
    return toeplitz_matrix(EXAMPLE, n), canonical_conjugation(n), family_conjugation(1, -1, n)


def odd_column_gap(n):
    """||T - T D||_F for T = T_{z^2 + zbar^2} and D = diag((-1)^k), by enumeration:
    every nonzero entry in an odd column changes sign, a difference of 2."""
    count = sum(1 for j in range(n) for k in range(n) if abs(j - k) == 2 and k % 2 == 1)
    return 2 * np.sqrt(count)


# --- intertwiner and induced conjugation -------------------------------------


def test_intertwiner_examples():
    np.testing.assert_array_equal(intertwiner_from_conjugation(canonical_conjugation(4)), np.eye(4))
    c = family_conjugation(1, -1, 4)
    t = intertwiner_from_conjugation(c)
    np.testing.assert_allclose(t, np.diag([1, -1j, 1, -1j]))
    # odd entries: (-i)(-1) = i = conj(-i)
    np.testing.assert_allclose(t @ c.matrix, t.conj())


def test_intertwiner_random_32():
    c = random_conjugation(32, 3)
    t = intertwiner_from_conjugation(c)
    assert unitarity_residual(t) <= 1e-10
    assert intertwining_residual(t, c) <= 1e-10
    # T C x = C_1 T x through the action
    x = np.random.default_rng(0).standard_normal(32) + 0j
    np.testing.assert_allclose(t @ c(x), np.conj(t @ x), atol=1e-10)
    assert verify_intertwiner(c).passed


def test_conjugation_from_isomorphism_examples():
    np.testing.assert_array_equal(conjugation_from_isomorphism(np.eye(3)).matrix, np.eye(3))
    c = conjugation_from_isomorphism(np.diag([1, -1j, 1, -1j]))
    np.testing.assert_allclose(c.matrix, np.diag([1, -1, 1, -1]))
    assert verify_conjugation_from_unitary(random_unitary(16, 5)).passed


def test_conjugation_from_isomorphism_rejects_non_unitary():
    with pytest.raises(ValueError, match="not unitary"):
        conjugation_from_isomorphism(2 * np.eye(3))


@settings(max_examples=25)
@given(st.integers(1, 64), seeds)
def test_round_trip_recovers_conjugation(n, seed):
    c = random_conjugation(n, seed)
    back = conjugation_from_isomorphism(intertwiner_from_conjugation(c))
    assert frobenius_distance(back.matrix, c.matrix) <= 1e-9


# --- transport ------------------------------------------------------------


def test_transport_examples():
    a = random_matrix(5, 1)
    np.testing.assert_allclose(transport_operator(a, np.eye(5)), a)
    t_phi = toeplitz_matrix(EXAMPLE, 8)
    b = transport_operator(t_phi, intertwiner_from_conjugation(canonical_conjugation(8)))
    assert frobenius_distance(b, b.T) == 0


@pytest.mark.parametrize("seed", range(5))
def test_transport_symmetrizes_c_symmetric_operator(seed):
    c = random_conjugation(20, seed)
    a = make_doubly_symmetric(random_matrix(20, seed + 100), c, c)
    t = intertwiner_from_conjugation(c)
    b = transport_operator(a, t)
    assert frobenius_distance(b, b.T) <= 1e-9
    assert spectral_mismatch(a, b) <= 1e-8
    assert verify_transport(a, c).passed


def test_transport_rejects_non_unitary():
    with pytest.raises(ValueError):
        transport_operator(np.eye(2), np.diag([1, 2]))


def test_verify_transport_requires_symmetry():
    with pytest.raises(ValueError, match="C-symmetric"):
        verify_transport(random_matrix(4, 0), random_conjugation(4, 0))


# --- canonical conjugation vs matrix symmetry -------------------------------


def test_symmetric_equivalence_examples():
    a = random_matrix(6, 2)
    r = check_symmetric_equivalence(a + a.T)
    assert r.passed and r.residuals["csym_c1"] == 0 and r.residuals["transpose"] == 0
    assert "c1_symmetric=True" in r.notes
    s = np.eye(5, k=-1)
    r = check_symmetric_equivalence(s)
    assert r.residuals["csym_c1"] == pytest.approx(np.sqrt(8))
    assert r.residuals["transpose"] == pytest.approx(np.sqrt(8))
    assert "c1_symmetric=False" in r.notes


def test_symmetric_equivalence_gap_on_random_matrices():
    for seed in range(100):
        r = check_symmetric_equivalence(random_matrix(32, seed))
        assert r.residuals["gap"] <= 1e-13


# --- symmetrizers and doubly symmetric operators ------------------------------


def test_make_doubly_symmetric_examples():
    n = 8
    c1, cm1 = canonical_conjugation(n), family_conjugation(1, -1, n)
    t_phi = toeplitz_matrix(EXAMPLE, n)
    np.testing.assert_allclose(make_doubly_symmetric(t_phi, c1, cm1), t_phi)
    p = make_doubly_symmetric(random_matrix(n, 4), c1, cm1)
    assert csym_residual(p, c1) <= 1e-12
    assert csym_residual(p, cm1) <= 1e-12


def test_make_doubly_symmetric_rejects_non_commuting():
    n = 6
    with pytest.raises(ValueError, match="do not commute"):
        make_doubly_symmetric(random_matrix(n, 0), canonical_conjugation(n), family_conjugation(1, 1j, n))


@given(st.integers(1, 16), seeds)
def test_symmetrizer_algebra(n, seed):
    a = random_matrix(n, seed)
    c = random_conjugation(n, seed + 1)
    np.testing.assert_allclose(symmetrizer(symmetrizer(a, c), c), a, atol=1e-12)
    cc, jj = random_commuting_pair(n, seed)
    np.testing.assert_allclose(symmetrizer(symmetrizer(a, jj), cc), symmetrizer(symmetrizer(a, cc), jj), atol=1e-12)


@given(st.integers(1, 16), seeds, st.sampled_from(PAIR_KINDS))
def test_generated_instances_are_doubly_symmetric(n, seed, kind):
    t, c, j = doubly_symmetric_instance(n, seed, kind)
    assert is_conjugation(c).passed and is_conjugation(j).passed
    assert commutator_residual(c, j) <= 1e-12
    assert csym_residual(t, c) <= 1e-12
    assert csym_residual(t, j) <= 1e-12


# --- relations for pairs of commuting conjugations ---------------------------


def test_double_symmetry_relations_on_example_trio():
    n = 8
    r = verify_double_symmetry_relations(*example_trio(n))
    assert r.residuals["adjoint_c_eq_jtj"] <= 1e-12
    assert r.residuals["adjoint_j_eq_ctc"] <= 1e-12
    # CT and JT, and CT and T*J, differ exactly in the odd columns/rows of T
    assert r.residuals["ct_eq_jt"] == pytest.approx(odd_column_gap(n))
    assert r.residuals["ct_eq_adjoint_j"] == pytest.approx(odd_column_gap(n))
    assert not r.passed


def test_double_symmetry_relations_when_c_equals_j():
    c = random_conjugation(10, 9)
    t = make_doubly_symmetric(random_matrix(10, 1), c, c)
    r = verify_double_symmetry_relations(t, c, c)
    assert r.passed
    assert r.residuals["ct_eq_adjoint_j"] == pytest.approx(csym_residual(t, c))


@pytest.mark.parametrize("kind", PAIR_KINDS)
def test_double_symmetry_relations_generated(kind):
    t, c, j = doubly_symmetric_instance(16, 21, kind)
    r = verify_double_symmetry_relations(t, c, j)
    assert r.residuals["adjoint_c_eq_jtj"] <= 1e-10
    assert r.residuals["adjoint_j_eq_ctc"] <= 1e-10
    if kind == "same":
        assert r.passed


@given(st.integers(2, 16), seeds, st.sampled_from(PAIR_KINDS))
def test_relation_ct_adjoint_j_forces_equal_conjugations(n, seed, kind):
    # CT - T*J = T*(C - J) + (CT - T*C), so the relation residual is at least
    # sigma_min(T) ||M_C - M_J||_F minus the C-symmetry residual.
    t, c, j = doubly_symmetric_instance(n, seed, kind)
    r = verify_double_symmetry_relations(t, c, j)
    sigma = np.linalg.svd(t, compute_uv=False).min()
    lower = sigma * frobenius_distance(c.matrix, j.matrix) - csym_residual(t, c)
    assert r.residuals["ct_eq_adjoint_j"] >= lower - 1e-9


def test_double_symmetry_relations_preconditions():
    n = 6
    with pytest.raises(ValueError, match="C-symmetric"):
        verify_double_symmetry_relations(random_matrix(n, 0), canonical_conjugation(n), canonical_conjugation(n))
    c, j = random_commuting_pair(n, 3)
    t = make_doubly_symmetric(random_matrix(n, 1), c, c)
    with pytest.raises(ValueError, match="J-symmetric"):
        verify_double_symmetry_relations(t, c, j)


def test_fixed_basis_transpose_examples():
    n = 8
    t = random_matrix(n, 3)
    c1 = canonical_conjugation(n)
    assert verify_fixed_basis_transpose(t + t.T, c1, c1).passed
    r = verify_fixed_basis_transpose(*example_trio(n))
    assert r.residuals["fixed_basis_symmetry"] == 0
    assert r.residuals["transpose_relation"] == pytest.approx(odd_column_gap(n))
    t, c, j = doubly_symmetric_instance(16, 4, "same")
    assert verify_fixed_basis_transpose(t, c, j).passed


@pytest.mark.parametrize("kind", PAIR_KINDS)
def test_operator_is_symmetric_in_fixed_basis(kind):
    t, c, j = doubly_symmetric_instance(16, 8, kind)
    assert verify_fixed_basis_transpose(t, c, j).residuals["fixed_basis_symmetry"] <= 1e-10


def test_commutation_converse_examples():
    r = verify_commutation_converse(*example_trio(8))
    assert r.inconclusive and not r.passed
    assert "CT = T*J" in r.notes
    n = 5
    r = verify_commutation_converse(np.zeros((n, n)), canonical_conjugation(n), family_conjugation(1, -1, n))
    assert r.inconclusive and "injective" in r.notes
    assert r.status == "inconclusive"


def test_commutation_converse_round_trip():
    for seed in range(6):
        t, c, j = doubly_symmetric_instance(12, seed, "same")
        assert verify_double_symmetry_relations(t, c, j).passed
        r = verify_commutation_converse(t, c, j)
        if r.residuals["sigma_min"] > ToleranceConfig().injectivity_threshold:
            assert r.passed
            assert r.residuals["commutator"] <= r.tolerances["commutator"]


def test_commutation_converse_with_equal_conjugations_from_c2():
    # J = C is the only way the relation can hold for injective T
    c = random_conjugation(8, 2)
    t = make_doubly_symmetric(random_matrix(8, 2), c, c)
    r = verify_commutation_converse(t, c, c)
    assert r.status == "pass"


# --- Toeplitz equivalence ------------------------------------------------------


def test_toeplitz_equivalence_example_trio_is_a_counterexample():
    n = 8
    _, c1, cm1 = example_trio(n)
    r = verify_toeplitz_relation_equivalence(EXAMPLE, c1, cm1, n)
    assert r.residuals["commutator"] == 0
    assert r.residuals["relation"] == pytest.approx(odd_column_gap(n))
    assert not r.passed
    assert "sigma_min(A)=" in r.notes and "sigma_min(A*)=" in r.notes


def test_toeplitz_equivalence_same_conjugation():
    n = 8
    c1 = canonical_conjugation(n)
    assert verify_toeplitz_relation_equivalence(EXAMPLE, c1, c1, n).passed


def test_toeplitz_equivalence_preconditions():
    n = 8
    c1 = canonical_conjugation(n)
    with pytest.raises(ValueError, match="J-symmetric"):
        verify_toeplitz_relation_equivalence(EXAMPLE, c1, family_conjugation(1, 1j, n), n)
    with pytest.raises(ValueError, match="too small"):
        verify_toeplitz_relation_equivalence(EXAMPLE, canonical_conjugation(5), canonical_conjugation(5), 5)


@pytest.mark.parametrize("kind,passes", [("same", True), ("opposite", False), ("quarter", True)])
def test_toeplitz_equivalence_sweep(kind, passes):
    for seed in range(5):
        phi, c, j = toeplitz_pair_instance(12, seed, kind, bandwidth=4)
        r = verify_toeplitz_relation_equivalence(phi, c, j, 12)
        assert r.passed == passes
        if kind == "quarter":
            # neither side holds
            assert r.residuals["commutator"] > 1e-3 and r.residuals["relation"] > 1e-3


# --- rigidity ---------------------------------------------------------------


def test_rigidity_examples():
    r = verify_intertwiner_rigidity(canonical_conjugation(6))
    assert r.passed and r.notes == "antecedent holds"
    assert r.residuals["distance_to_c1"] == 0
    r = verify_intertwiner_rigidity(family_conjugation(1, -1, 6))
    assert r.passed and "vacuously" in r.notes
    assert r.residuals["commutes_with_c1"] > 1


def test_rigidity_sweep():
    for seed in range(100):
        assert verify_intertwiner_rigidity(random_conjugation(8, seed)).passed


# --- the worked example --------------------------------------------------------


@pytest.mark.parametrize("n", [8, 16, 64])
def test_example_trio_residuals(n):
    r = verify_example_trio(n)
    assert r.residuals["csym_c1"] == 0
    assert r.residuals["csym_cminus1"] == 0
    # C_1 T* C_-1 = T diag((-1)^k), which differs from T
    assert r.residuals["two_sided"] == pytest.approx(odd_column_gap(n))
    a, c1, cm1 = example_trio(n)
    np.testing.assert_allclose(compose(c1, adjoint(a), cm1), a @ cm1.matrix)
