import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complex_vectors, gauss, scalars
from kulkarni.fibration import iota_embed, random_isometry
from kulkarni.hermitian import conj_dependent, f_value, herm_norm
from kulkarni.limit_set import (
    CODE,
    DEGENERATE,
    LABELS,
    DegenerateDeterminantError,
    PartitionLabel,
    RegionLabel,
    classify,
    classify_batch,
    classify_equal_dim,
    classify_projected,
    omega2_component,
    omega2_sign_det,
    partition_label,
)
from kulkarni.projective import in_lambda0, q_project
from kulkarni.verify import boundary_point, parabolic_point

L = RegionLabel


def tangent_sphere_oracle(p):
    """Membership of [p] in the union of H_s over real null s = (v, 1), |v| = 1.

    p lies on H_s iff v . Re p' = Re p_last and v . Im p' = Im p_last (p' the
    spatial part), so the question is whether that affine solution set of v
    meets the unit sphere.  Returns (in_lambda, minimal |v|) with |v| = inf
    when the system is inconsistent.
    """
    x, y = p[:-1].real, p[:-1].imag
    rhs = np.array([p[-1].real, p[-1].imag])
    a = np.vstack([x, y])
    v, *_ = np.linalg.lstsq(a, rhs, rcond=None)
    residual = np.linalg.norm(a @ v - rhs)
    if residual > 1e-9 * (1 + np.linalg.norm(a) * np.linalg.norm(v)):
        return False, np.inf
    rank = np.linalg.matrix_rank(a, tol=1e-12 * np.linalg.norm(a))
    vn = np.linalg.norm(v)
    free_dims = len(x) - rank
    if free_dims == 0:
        return abs(vn - 1) < 1e-12, vn
    return vn <= 1, vn


# --- hand examples ---------------------------------------------------------


def test_partition_examples():
    assert partition_label([1.0, -2.0, 0.5, 3.0]) == PartitionLabel.U0
    assert partition_label([1j, 0, 0, 1]) == PartitionLabel.UPLUS
    assert partition_label([1, 1j, 0, 0]) == PartitionLabel.UMINUS


@pytest.mark.parametrize("n", [2, 3, 5])
def test_classify_real_examples(n):
    o = np.zeros(n + 1)
    o[-1] = 1
    assert classify(o) == (L.OMEGA_ZERO if n == 2 else L.OMEGA_SINGLE)
    e1 = np.zeros(n + 1)
    e1[0] = 1
    assert classify(e1) == L.LAMBDA_REAL_EXTERIOR
    assert classify(e1 + o) == L.LAMBDA_REAL_EXTERIOR


def test_classify_complex_examples():
    assert classify([1, 1j, 0, 0]) == L.LAMBDA_INTERIOR
    assert classify([1, 1j, 0]) == L.OMEGA_PLUS
    assert classify([1j, 1, 0]) == L.OMEGA_MINUS
    assert classify([0, 0, 1]) == L.OMEGA_ZERO
    assert omega2_sign_det([1, 1j, 0]) == 1
    assert omega2_sign_det([1j, 1, 0]) == -1


def test_classify_projected_examples():
    assert classify([0, 0, 1, 0, 0], 2) == L.LAMBDA0
    assert classify([1, 1j, 5, 5, 0], 2) == L.OMEGA_PLUS
    assert classify([1, 1j, 0, 0, 0], 3) == L.LAMBDA_INTERIOR
    assert classify_projected([1, 1j, 5, 5, 0], 2) == L.OMEGA_PLUS
    assert classify_projected([0, 0, 1, 0, 0], 2) == L.LAMBDA0


def test_omega2_component():
    assert omega2_component([1, 1j, 0]) == L.OMEGA_PLUS
    assert omega2_component([0.2, 0.1, 1]) == L.OMEGA_ZERO
    with pytest.raises(ValueError):
        omega2_component([1, 0, 0])  # real exterior point is in Lambda
    with pytest.raises(ValueError):
        omega2_component([1, 1j, 0, 0])


def test_label_strings():
    assert [lab.value for lab in LABELS] == [
        "LAMBDA0", "LAMBDA_REAL", "LAMBDA_PARA", "LAMBDA_INT",
        "OMEGA_0", "OMEGA_MINUS", "OMEGA_PLUS", "OMEGA",
    ]
    assert all(RegionLabel.parse(lab.value) is lab for lab in LABELS)
    assert {lab for lab in LABELS if lab.in_lambda} == {
        L.LAMBDA0, L.LAMBDA_REAL_EXTERIOR, L.LAMBDA_PARABOLIC, L.LAMBDA_INTERIOR
    }


def test_zero_vector_and_bad_m():
    with pytest.raises(ValueError):
        classify([0, 0, 0])
    with pytest.raises(ValueError):
        classify([1, 0, 0], 3)


def test_degenerate_code_needs_a_huge_tolerance(rng):
    # f < -tol|p|^4 forces d^2 > tol|p|^4 / 4, so |d| <= tol|p|^2 needs tol > 1/4
    p = gauss(rng, 2, 20000)
    for tol in (1e-9, 1e-3, 0.2):
        assert not np.any(classify_batch(p, 2, tol) == DEGENERATE)
    z = np.array([1, 1j, 0])
    assert classify(z, 2, tol=0.1) == L.OMEGA_PLUS
    assert classify_batch(z, 2, tol=0.5)[()] == DEGENERATE
    with pytest.raises(DegenerateDeterminantError):
        classify(z, 2, tol=0.5)


# --- definitional oracle ---------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4])
def test_labels_match_tangent_sphere_oracle(rng, m):
    for _ in range(3000):
        p = gauss(rng, m)
        label = classify(p)
        s = np.sum(np.abs(p) ** 2) ** 2
        if abs(f_value(p)) < 1e-6 * s:
            continue  # too close to the boundary for the oracle's tolerances
        member, vn = tangent_sphere_oracle(p)
        assert label.in_lambda == member, (p, label, vn)
        if m == 2:
            # |v| < 1 exactly on the two components Omega_+-
            inside = vn < 1
            assert (label in (L.OMEGA_PLUS, L.OMEGA_MINUS)) == inside


@pytest.mark.parametrize("m", [2, 3])
def test_real_points_match_oracle(rng, m):
    for _ in range(500):
        p = rng.standard_normal(m + 1) * (1 + 1j)
        member, _ = tangent_sphere_oracle(p)
        assert classify(p).in_lambda == member


def test_parabolic_points_are_in_lambda(rng):
    for m in (2, 3, 4):
        for _ in range(200):
            p = parabolic_point(rng, m)
            assert classify(p) == L.LAMBDA_PARABOLIC
            member, vn = tangent_sphere_oracle(p)
            assert member or abs(vn - 1) < 1e-6


def test_interior_witness_ball(rng):
    c = np.array([1, 1j, 0, 0]) / np.sqrt(2)
    for _ in range(200):
        d = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        z = c + 1e-3 * rng.uniform() * d / np.linalg.norm(d)
        assert classify(z, 3) == L.LAMBDA_INTERIOR


# --- properties ------------------------------------------------------------


@given(complex_vectors(), scalars())
def test_projective_well_definedness(z, a):
    n = len(z) - 1
    for m in range(2, n + 1):
        try:
            base = classify(z, m)
        except DegenerateDeterminantError:
            continue
        assert classify(a * z, m) == base


@pytest.mark.parametrize("kind", ["real", "real_null", "parabolic", "lambda0"])
def test_boundary_strata_are_scale_invariant(rng, kind):
    for _ in range(200):
        z = boundary_point(rng, 2, 4, kind)
        assert classify(z * (0.3 - 7j), 2) == classify(z, 2)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 4), (3, 3), (3, 5)])
def test_invariance_under_embedded_isometries(rng, m, n):
    for seed in range(300):
        g = iota_embed(random_isometry(m, seed), n)
        z = gauss(rng, n)
        gz = g.apply(z)
        s = np.sum(np.abs(z) ** 2) ** 2
        assert abs(f_value(gz) - f_value(z)) <= 1e-8 * s
        # the tolerance band is relative, so both z and Gz must be clear of it
        clear = True
        for w in (z, gz):
            p = q_project(w, m)
            sp = np.sum(np.abs(p) ** 2)
            clear &= abs(f_value(p)) > 1e-6 * sp**2 and abs(herm_norm(p)) > 1e-6 * sp
        if clear:
            assert classify(gz, m) == classify(z, m)
            assert partition_label(gz) == partition_label(z)


@settings(max_examples=200)
@given(complex_vectors(min_n=3))
def test_factorization_through_projection(z):
    n = len(z) - 1
    for m in range(2, n):
        if in_lambda0(z, m):
            assert classify(z, m) == L.LAMBDA0
            continue
        try:
            assert classify(z, m) == classify_equal_dim(q_project(z, m))
        except DegenerateDeterminantError:
            pass


def test_lambda0_label_ignores_coordinates_outside(rng):
    z = np.zeros(6, dtype=complex)
    z[2:5] = gauss(rng, 2)
    assert classify(z, 2) == L.LAMBDA0
    assert in_lambda0(z, 2)


@pytest.mark.parametrize("n", [3, 4])
def test_lambda_restatement_through_partition(rng, n):
    for i in range(1000):
        z = gauss(rng, n) if i % 3 else boundary_point(rng, n, n, ["real", "parabolic", "real_null"][i % 9 // 3])
        part = partition_label(z)
        real_neg = conj_dependent(z) and herm_norm(z) < -1e-9 * np.sum(np.abs(z) ** 2)
        expect = part == PartitionLabel.UMINUS or (part == PartitionLabel.U0 and not real_neg)
        assert classify(z).in_lambda == expect


def test_positivity_side_condition(rng):
    checked = 0
    for i in range(2000):
        n = 2 + i % 4
        z = parabolic_point(rng, n) if i % 2 else gauss(rng, n)
        s = np.sum(np.abs(z) ** 2)
        if f_value(z) <= 1e-9 * s * s and not conj_dependent(z):
            checked += 1
            assert herm_norm(z) > -1e-9 * s
    assert checked > 500


def test_m3_never_produces_omega_pm(rng):
    codes = classify_batch(gauss(rng, 3, 5000))
    assert not np.isin(codes, [CODE[L.OMEGA_PLUS], CODE[L.OMEGA_MINUS], CODE[L.OMEGA_ZERO]]).any()


def test_batch_agrees_with_scalar(rng):
    z = gauss(rng, 4, 300)
    for m in (2, 3, 4):
        codes = classify_batch(z, m)
        assert [LABELS[c] for c in codes] == [classify(row, m) for row in z]
