import math

import numpy as np
import pytest
import sympy
from scipy.special import eval_hermite

from quatcs import (
    ONE, HermiteFamilyS, HermiteFamilyTwo, Quaternion, analytic_Aq, analytic_Aqbar, b_n,
    hermite_cs_and_quantize, hermite_n, hermite_nm, hermite_orthogonality_s,
)
from quatcs.hermite import b_n_exact, hermite_grid, hermite_n_recurrence, hermite_nm_table, rodrigues_nm
from quatcs.linalg import operator_distance

from .strategies import qclose


def ball(rng, n, radius):
    v = rng.normal(size=(n, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return [Quaternion.from_array(x) for x in v * radius * rng.uniform(size=(n, 1)) ** 0.25]


def test_low_order_one_index():
    q = Quaternion(0.3, -1.2, 0.4, 0.9)
    assert hermite_n(0, q) == ONE
    assert qclose(hermite_n(1, q), q * 2.0, 1e-15)
    assert qclose(hermite_n(2, q), q * q * 4.0 - ONE * 2.0, 1e-14)


def test_sum_form_matches_recurrence(rng):
    for q in ball(rng, 30, 2.0):
        for n in range(13):
            a, b = hermite_n(n, q), hermite_n_recurrence(n, q)
            assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_real_argument_matches_classical_hermite():
    for n in range(10):
        for x in (-1.4, 0.0, 0.6, 2.1):
            ref = eval_hermite(n, x)
            assert hermite_n(n, Quaternion.real(x)).x0 == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_b_n_values():
    assert b_n(0, 0.5) == pytest.approx(math.pi * math.sqrt(2), rel=1e-15)
    assert sympy.simplify(b_n_exact(0, sympy.Rational(1, 2)) - sympy.pi * sympy.sqrt(2)) == 0
    for s in (sympy.Rational(1, 3), sympy.Rational(7, 10)):
        c = 2 * (1 + s) / (1 - s)
        for n in range(10):
            assert sympy.simplify(b_n_exact(n + 1, s) / b_n_exact(n, s) - c * (n + 1)) == 0
            assert b_n_exact(n, s) > 0


def test_family_s_parameter_range():
    with pytest.raises(ValueError):
        HermiteFamilyS(0.0)
    with pytest.raises(ValueError):
        HermiteFamilyS(0.995)
    HermiteFamilyS(0.01), HermiteFamilyS(0.99)


@pytest.mark.parametrize("s", [0.2, 0.5, 0.8])
def test_gram_matrix_is_identity(s):
    G = hermite_orthogonality_s(s, 6)
    eye = np.zeros_like(G)
    eye[..., 0] = np.eye(7)
    assert np.abs(G - eye).max() <= 1e-8


def test_hermite_grid_moments():
    g = hermite_grid(0.5, 4)
    q, w = g.nodes()
    # total mass of exp(-(1-s)x^2 - (1/s-1)y^2) is pi / sqrt((1-s)(1/s-1)) = pi sqrt(s)/(1-s)
    assert w.sum() == pytest.approx(math.pi * math.sqrt(0.5) / 0.5, rel=1e-14)


def test_normalized_recurrence_matches_direct(rng):
    fam = HermiteFamilyS(0.4)
    q = np.array([x.to_array() for x in ball(rng, 5, 1.5)])
    h = fam.normalized(q, 10)
    for n in range(10):
        for a, x in zip(h[:, n], q):
            direct = hermite_n(n, Quaternion.from_array(x)) * (1 / math.sqrt(fam.b(n)))
            assert qclose(Quaternion.from_array(a), direct, 1e-12 * max(1.0, abs(direct)))


def test_one_index_kernel_is_scalar_closed_form(rng):
    fam = HermiteFamilyS(0.5)
    q = np.array([x.to_array() for x in ball(rng, 10, 1.5)])
    ks = fam.kernel_series(q, 200)
    closed = fam.kernel(q[:, 0], np.linalg.norm(q[:, 1:], axis=1))
    assert np.max(np.abs(ks[:, 0] - closed) / closed) <= 1e-10
    assert np.max(np.linalg.norm(ks[:, 1:], axis=1) / closed) <= 1e-13


def test_one_index_quantization_structure():
    r = hermite_cs_and_quantize(HermiteFamilyS(0.5), n_trunc=8)
    assert r.identity_defect <= 1e-10
    assert r.adjoint_defect <= 1e-10
    assert r.band_defect <= 1e-10
    assert r.normalization_defect <= 1e-10


# two indices -----------------------------------------------------------------

def test_low_order_two_index(rng):
    for q in ball(rng, 20, 2.0):
        assert hermite_nm(0, 0, q) == ONE
        assert hermite_nm(0, 1, q) == q
        assert hermite_nm(1, 0, q) == q.conjugate()
        assert qclose(hermite_nm(1, 1, q), ONE * (q.norm2() - 1.0), 1e-13)


def test_recurrence_against_rodrigues(rng):
    for q in ball(rng, 4, 1.5):
        T = hermite_nm_table(4, 4, q.to_array())
        for n in range(5):
            for m in range(5):
                ref = rodrigues_nm(n, m, q)
                assert abs(Quaternion.from_array(T[n, m]) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_two_index_kernel_sixty_terms(rng):
    fam = HermiteFamilyTwo(0)
    q = np.array([x.to_array() for x in ball(rng, 30, 2.0)])
    ks = fam.kernel_series(q, 60)
    closed = fam.kernel(q)
    assert np.max(np.abs(ks[:, 0] - closed) / closed) <= 1e-8
    assert np.max(np.linalg.norm(ks[:, 1:], axis=1) / closed) <= 1e-13


@pytest.mark.parametrize("n", [0, 1, 3])
def test_two_index_quantization_structure(n):
    r = hermite_cs_and_quantize(HermiteFamilyTwo(n), n_trunc=10)
    assert r.identity_defect <= 1e-10
    assert r.adjoint_defect <= 1e-10
    assert r.band_defect <= 1e-10
    assert r.normalization_defect <= 1e-10


def test_n0_family_reproduces_canonical_ladders():
    """``H_{0,m} = q**m`` puts ``conj(q)**m`` in the states, so ``q`` and ``conj q`` trade roles."""
    r = hermite_cs_and_quantize(HermiteFamilyTwo(0), n_trunc=16)
    assert operator_distance(r.Aq, analytic_Aqbar(16)) <= 1e-10
    assert operator_distance(r.Aqbar, analytic_Aq(16)) <= 1e-10


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        hermite_nm(-1, 0, ONE)
    with pytest.raises(ValueError):
        HermiteFamilyTwo(-1)
    with pytest.raises(ValueError):
        hermite_n(-1, ONE)
