import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatcs import (
    ExactnessError, ExactnessWarning, Quaternion, RQOperator, RQVector, Symbol, adjoint,
    analytic_Aq, analytic_Aqbar, apply, build_grid, commutator_check, moment_check, quantize,
    resolution_identity_check,
)
from quatcs.linalg import operator_distance
from quatcs.observables import oscillator_hamiltonian
from quatcs.quadrature import required_certificate
from quatcs.quantize import adjoint_pair_defect, band_pattern, exact_ladders

from .strategies import qclose


@pytest.fixture(scope="module")
def grid16():
    return build_grid(16, 2)


def test_grid_certificate_rule():
    g = build_grid(8, 2)
    assert g.sizes["radial"] >= 6
    assert g.certificate.covers(8, 2)
    assert g.certificate.radial_degree >= 10 and g.certificate.theta_degree >= 18
    assert required_certificate(8, 2).radial_degree == 10


def test_weights_sum_to_one():
    _, w = build_grid(5, 0).nodes()
    assert w.sum() == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("m, value", [(0, 1), (3, 6), (5, 120), (10, 3628800)])
def test_moments(m, value):
    g = build_grid(12)
    assert moment_check(g, m) == pytest.approx(value, rel=1e-12)


def test_moments_up_to_twenty():
    g = build_grid(20)
    for m in range(21):
        assert moment_check(g, m) == pytest.approx(math.factorial(m), rel=1e-12)


def test_moment_beyond_certificate_raises():
    g = build_grid(4)
    with pytest.raises(ExactnessError):
        moment_check(g, g.certificate.radial_degree + 1)


def test_theta_rule_kills_low_frequencies():
    g = build_grid(6)
    M = len(g.theta)
    for a in range(1, M):
        assert abs(np.mean(np.exp(1j * a * g.theta))) <= 1e-14


def test_analytic_ladders():
    A = analytic_Aq(6)
    assert A[0, 1] == Quaternion(1.0, 0.0, 0.0, 0.0)
    assert A[3, 4] == Quaternion(2.0, 0.0, 0.0, 0.0)
    assert apply(A, RQVector.basis(6, 0)).max_abs() == 0.0
    assert operator_distance(adjoint(A), analytic_Aqbar(6)) == 0.0
    for k in range(5):
        assert (apply(analytic_Aqbar(6), RQVector.basis(6, k))
                - RQVector.basis(6, k + 1, [math.sqrt(k + 1), 0, 0, 0])).max_abs() <= 1e-15


def test_quantize_ladder_symbols(grid16):
    assert operator_distance(quantize(Symbol.q(), grid16, 16).operator, analytic_Aq(16)) <= 1e-12
    assert operator_distance(quantize(Symbol.qbar(), grid16, 16).operator, analytic_Aqbar(16)) <= 1e-12


@pytest.mark.parametrize("N", [1, 8, 16])
def test_unit_symbol_is_identity(N):
    assert resolution_identity_check(build_grid(N), N) <= 1e-12


def test_abs2_is_oscillator(grid16):
    A = quantize(Symbol.abs2(), grid16, 16).operator
    H = oscillator_hamiltonian(16)
    assert np.abs((A.data - H.data)[:15, :15]).max() <= 1e-10
    assert operator_distance(A, adjoint(A)) <= 1e-12


def test_uncertified_grid_warns():
    g = build_grid(4, 0)
    with pytest.warns(ExactnessWarning):
        res = quantize(Symbol.abs2(), g, 8)
    assert not res.certified


def test_band_pattern_of_monomials():
    N = 10
    for a, b in [(2, 0), (0, 3), (2, 1), (1, 1)]:
        sym = Symbol.polynomial([(a, 1.0, b)])
        res = quantize(sym, build_grid(N, a + b), N)
        assert res.certified and res.residual <= 1e-12
        mask = band_pattern(sym, N)
        idx = np.argwhere(mask)
        assert np.all(idx[:, 1] - idx[:, 0] == a - b)


def test_quaternion_coefficient_symbol_adjoint():
    f = Symbol.polynomial([(2, Quaternion(0.5, 1, 2, -0.25), 1), (0, Quaternion(0, 0, 1, 0), 1)])
    N = 10
    assert adjoint_pair_defect(f, build_grid(N, 3), N) <= 1e-12


def test_refinement_does_not_change_certified_results():
    N = 10
    g = build_grid(N, 2)
    fine = build_grid(N, 2, radial_order=g.sizes["radial"] + 4, theta_nodes=g.sizes["theta"] + 6,
                      phi_order=4, psi_nodes=9)
    for sym in (Symbol.abs2(), Symbol.polynomial([(2, Quaternion(1, 0, 1, 0), 0)])):
        a = quantize(sym, g, N).operator
        b = quantize(sym, fine, N).operator
        assert operator_distance(a, b) <= 1e-13 * N


@given(st.integers(0, 2), st.integers(0, 2),
       st.tuples(*[st.floats(-2, 2, allow_nan=False)] * 4))
@settings(max_examples=20, deadline=None)
def test_polynomial_symbol_evaluation(a, b, c):
    sym = Symbol.polynomial([(a, Quaternion(*c), b)])
    q = np.random.default_rng(a * 3 + b).normal(size=(6, 4))
    vals = sym(q)
    for x, v in zip(q, vals):
        assert qclose(sym.expand_at(Quaternion.from_array(x)), Quaternion.from_array(v), 1e-12)


def test_callable_symbol_is_uncertified_but_runs():
    sym = Symbol.from_callable(lambda q: np.exp(-np.sum(q ** 2, axis=-1)))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        res = quantize(sym, build_grid(6, 4), 6)
    assert not res.certified and math.isnan(res.residual)
    assert operator_distance(res.operator, adjoint(res.operator)) <= 1e-12


@pytest.mark.parametrize("N", [2, 5, 16])
def test_commutator_report(N):
    rep = commutator_check(N)
    assert rep.passed
    assert rep.safe_defect == 0.0 and rep.product_defect == 0.0
    assert rep.corner == 1 - N and rep.trace == 0.0
    assert rep.float_defect <= 1e-13


def test_exact_ladder_products():
    A, Ad = exact_ladders(5)
    assert list((A * Ad).diagonal()) == [1, 2, 3, 4, 0]
    assert list((Ad * A).diagonal()) == [0, 1, 2, 3, 4]


def test_quantize_identity_from_default_grid():
    res = quantize(Symbol.constant(), n_trunc=4)
    assert res.certified
    assert operator_distance(res.operator, RQOperator.identity(4)) <= 1e-13
