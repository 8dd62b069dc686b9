"""The fourteen acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N: PASS/FAIL`` line with the measured error.
"""
import math

import numpy as np
import pytest
import sympy

from quatcs import (
    I_UNIT, J_UNIT, K_UNIT, ONE, HermiteFamilyS, HermiteFamilyTwo, Quaternion, RQOperator,
    RQVector, Symbol, adjoint_defect, analytic_Aq, analytic_Aqbar, build_grid,
    canonical_commutation_check, commutator_check, cs_eigen_check, cs_vector, differential_model_check,
    hermite_cs_and_quantize, hermite_nm, hermite_orthogonality_s, inner, moment_check,
    number_operator, oscillator_algebra_check, overlap, quantize,
)
from quatcs.hermite import b_n_exact, hermite_nm_table, rodrigues_nm
from quatcs.linalg import operator_distance
from quatcs.observables import expectation, oscillator_hamiltonian

N = 16
N_CS = 32


@pytest.fixture
def record(capsys):
    def _record(number, title, err, tol):
        """``err`` and ``tol`` may be lists when a criterion bundles several measurements."""
        errs, tols = np.atleast_1d(err), np.atleast_1d(tol)
        ok = bool(np.all(errs <= tols))
        measured = " ".join(f"err={e:.3e} tol={t:.1e}" for e, t in zip(errs, tols))
        with capsys.disabled():
            print(f"\ncriterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  {measured}")
        return ok
    return _record


@pytest.fixture(scope="module")
def grid():
    return build_grid(N, 2)


def ball(seed, n, radius):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=(n, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return [Quaternion.from_array(x) for x in v * radius * rng.uniform(size=(n, 1)) ** 0.25]


def test_criterion_01_ladder_reproduction(grid, record):
    aq = operator_distance(quantize(Symbol.q(), grid, N).operator, analytic_Aq(N))
    aqb = operator_distance(quantize(Symbol.qbar(), grid, N).operator, analytic_Aqbar(N))
    assert record(1, "quantize(q), quantize(qbar) vs ladder matrices", max(aq, aqb), 1e-12)


def test_criterion_02_unit_symbol(grid, record):
    err = operator_distance(quantize(Symbol.constant(), grid, N).operator, RQOperator.identity(N))
    assert record(2, "quantize(1) = identity", err, 1e-12)


def test_criterion_03_oscillator_hamiltonian(grid, record):
    A = quantize(Symbol.abs2(), grid, N).operator
    d = A.data - oscillator_hamiltonian(N).data
    err = float(np.sqrt(np.sum(d[: N - 1, : N - 1] ** 2, axis=-1)).max())
    assert record(3, "quantize(|q|^2) = N + 1 on 0..N-2", err, 1e-10)


def test_criterion_04_commutator(record):
    rep = commutator_check(N)
    err = rep.safe_defect + abs(rep.corner - (1 - N))
    assert rep.corner == 1 - N
    assert record(4, "[A_q, A_qbar] = 1 on 0..N-2 (exact), corner 1-N", err, 0.0)


def test_criterion_05_weyl_heisenberg(record):
    rep = oscillator_algebra_check(N)
    err = max(rep.exact_defects["[N,Aq]+Aq"], rep.exact_defects["[N,Aqbar]-Aqbar"])
    assert record(5, "[N, A_q] = -A_q, [N, A_qbar] = A_qbar (exact)", err, 0.0)


def test_criterion_06_counterexample(record):
    lhs, rhs = adjoint_defect(Quaternion(0, 1, 2, 0), RQOperator.identity(1),
                              RQVector.from_quaternions([K_UNIT]), RQVector.from_quaternions([J_UNIT]))
    err = max(abs(lhs - Quaternion(1, 0, 0, -2)), abs(rhs - Quaternion(1, 0, 0, 2)))
    assert lhs == Quaternion(1, 0, 0, -2) and rhs == Quaternion(1, 0, 0, 2)
    assert record(6, "adjoint_defect(i+2j, 1, k, j) = (1-2k, 1+2k)", err, 0.0)


def test_criterion_07_lower_symbol(record):
    Nop = number_operator(N_CS)
    err = max(abs(expectation(Nop, p) - ONE * p.norm2()) for p in ball(7, 100, 1.5))
    assert record(7, "<gamma_p|N|gamma_p> = |p|^2, 100 labels, N=32", err, 1e-8)


def test_criterion_08_overlap(record):
    err = 0.0
    for p, q in zip(ball(8, 50, 1.5), ball(80, 50, 1.5)):
        direct = inner(cs_vector(q, N_CS).vector, cs_vector(p, N_CS).vector)
        err = max(err, abs(overlap(p, q) - direct))
    assert record(8, "closed-form overlap vs inner product, N=32", err, 1e-10)


def test_criterion_09_slice_qm(record):
    err = 0.0
    for unit in (I_UNIT, J_UNIT, Quaternion(0, 1, 1, 1) * (1 / math.sqrt(3))):
        rep = canonical_commutation_check(unit, N)
        spread = float(np.abs(rep.spectrum - (np.arange(N - 1) + 0.5)).max())
        err = max(err, rep.commutator_defect, rep.embedded_defect, rep.hamiltonian_defect, spread)
    assert record(9, "[Q_I, P_I] = I, H_I = n + 1/2 for three slices", err, 1e-13)


def test_criterion_10_cullen_model(record):
    rep = differential_model_check(N)
    assert record(10, "ladder operators = Cullen derivative / qbar multiplication", rep.exact_defect, 0.0)


def test_criterion_11_moments(record):
    g = build_grid(20)
    err = max(abs(moment_check(g, m) - math.factorial(m)) / math.factorial(m) for m in range(21))
    assert record(11, "moments m! for m <= 20 (relative)", err, 1e-12)


def test_criterion_12_hermite_one(record):
    G = hermite_orthogonality_s(0.5, 6)
    eye = np.zeros_like(G)
    eye[..., 0] = np.eye(7)
    gram = float(np.abs(G - eye).max())
    s = sympy.Rational(1, 2)
    ratio = max(abs(float(sympy.simplify(b_n_exact(n + 1, s) / b_n_exact(n, s) - 6 * (n + 1))))
                for n in range(12))
    assert ratio == 0.0
    assert record(12, "Gram of h_{n,1/2}, n <= 6; b_n ratio exact", gram, 1e-8)


def test_criterion_13_hermite_two(record):
    qs = ball(13, 50, 2.0)
    h11 = max(abs(hermite_nm(1, 1, q) - ONE * (q.norm2() - 1.0)) for q in qs)
    rod = 0.0
    for q in qs[:3]:
        T = hermite_nm_table(4, 4, q.to_array())
        rod = max(rod, max(abs(Quaternion.from_array(T[n, m]) - rodrigues_nm(n, m, q))
                           / max(1.0, abs(rodrigues_nm(n, m, q))) for n in range(5) for m in range(5)))
    pts = np.array([q.to_array() for q in qs])
    fam = HermiteFamilyTwo(0)
    ks = fam.kernel_series(pts, 60)
    kern = float(np.max(np.abs(ks[:, 0] - fam.kernel(pts)) / fam.kernel(pts)))
    r = hermite_cs_and_quantize(fam, n_trunc=N)
    # H_{0,m} = q**m, so this family's A_q is the canonical A_qbar and vice versa
    red = max(operator_distance(r.Aq, analytic_Aqbar(N)), operator_distance(r.Aqbar, analytic_Aq(N)))
    assert record(13, "H_{1,1}; Rodrigues oracle n,m <= 4; 60-term kernel; n=0 ladder pair",
                  [h11, rod, kern, red], [1e-12, 1e-12, 1e-8, 1e-10])


def test_criterion_14_cs_eigen_relation(record):
    err = max(cs_eigen_check(q, N_CS) for q in ball(14, 100, 1.0))
    assert record(14, "A_q gamma_q = gamma_q q on safe components, N=32", err, 1e-12)
