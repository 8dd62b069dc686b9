import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings

from quatcs import (
    ONE, Quaternion, RQVector, TruncationWarning, cs_eigen_check, cs_from_exponential, cs_vector,
    in_cs_domain, inner, overlap, slice_decompose, truncation_tail,
)
from quatcs.coherent import cs_eigen_defect_profile, exponential_terms, normalization

from .strategies import qclose, small_quaternions


def ball(rng, n, radius):
    v = rng.normal(size=(n, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return [Quaternion.from_array(x) for x in v * radius * rng.uniform(size=(n, 1)) ** 0.25]


def test_vacuum_state():
    g = cs_vector(Quaternion(), 6)
    assert (g.vector - RQVector.basis(6, 0)).max_abs() == 0.0
    assert g.tail_bound == 0.0


def test_truncation_tail_matches_series():
    r2, N = 2.3, 10
    series = math.exp(-r2) * sum(r2 ** m / math.factorial(m) for m in range(N, N + 100))
    assert truncation_tail(r2, N) == pytest.approx(series, rel=1e-12)


def test_normalization_within_tail(rng):
    for q in ball(rng, 40, 2.0):
        g = cs_vector(q, 32)
        assert abs(normalization(g) - 1.0) <= g.tail_bound + 1e-13


def test_truncation_warning_carries_the_bound():
    with pytest.warns(TruncationWarning, match="loses norm"):
        g = cs_vector(Quaternion(2.0, 1.0, 0.0, 0.0), 4)
    assert 1 - normalization(g) == pytest.approx(g.tail_bound, rel=1e-10)


def test_component_ratio_in_a_slice():
    q = Quaternion(0.3, 0.0, -0.7, 0.0)
    g = cs_vector(q, 20).vector
    for m in range(19):
        assert qclose(g[m + 1], g[m] * q * (1 / math.sqrt(m + 1)), 1e-15)


def test_components_stay_in_the_slice(rng):
    for q in ball(rng, 10, 1.5):
        u = slice_decompose(q).unit.to_array()[1:]
        d = cs_vector(q, 20).data[:, 1:]
        assert np.abs(d - np.outer(d @ u, u)).max() <= 1e-14


def test_overlap_against_inner_product(rng):
    for p, q in zip(ball(rng, 40, 1.5), ball(rng, 40, 1.5)):
        direct = inner(cs_vector(q, 32).vector, cs_vector(p, 32).vector)
        assert qclose(overlap(p, q), direct, 1e-10)


@given(small_quaternions, small_quaternions)
@settings(max_examples=50)
def test_overlap_hermitian_and_bounded(p, q):
    assert qclose(overlap(p, q).conjugate(), overlap(q, p), 1e-13)
    assert abs(overlap(p, q)) <= 1 + 1e-13
    assert qclose(overlap(q, q), ONE, 1e-12)


def test_eigen_relation(rng):
    assert cs_eigen_check(Quaternion(), 32) == 0.0
    for q in ball(rng, 30, 1.0):
        assert cs_eigen_check(q, 32) <= 1e-12


def test_eigen_defect_sits_in_last_component():
    profile = cs_eigen_defect_profile(Quaternion(1.2, 0.4, -0.3, 0.8), 10)
    assert profile[:-1].max() <= 1e-15
    assert profile[-1] > 1e-6


def test_exponential_generation(rng):
    assert (cs_from_exponential(Quaternion(), 8) - RQVector.basis(8, 0)).max_abs() == 0.0
    for q in ball(rng, 20, 1.0):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", TruncationWarning)
            ref = cs_vector(q, 24).vector
        assert (cs_from_exponential(q, 24) - ref).max_abs() <= 1e-12


def test_exponential_terms_are_scaled_basis_vectors():
    q = Quaternion(0.2, -0.5, 0.9, 0.1)
    for m, t in enumerate(exponential_terms(q, 8)):
        target = RQVector.basis(8, m, q ** m * (1 / math.sqrt(math.factorial(m))))
        assert (t - target).max_abs() <= 1e-15


def test_domain_predicate():
    assert in_cs_domain(100.0, math.factorial)
    assert in_cs_domain(0.5, lambda m: 1.0)
    assert not in_cs_domain(1.5, lambda m: 1.0)
    # rho(m) = 4**m: radius 2
    assert in_cs_domain(1.9, lambda m: 4.0 ** m) and not in_cs_domain(2.1, lambda m: 4.0 ** m)
