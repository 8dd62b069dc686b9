"""
Verification suites and report serialisation behind the ``quatcs-verify``
command.

Each suite returns a list of `Check` records. A check passes when its
measured error is at most its tolerance; witness-type checks (where the point
is that some identity *fails*) record an error of 0 when the witness was
found and 1 otherwise, with the witness itself in ``detail``.
"""
from __future__ import annotations

import csv
import io
import math
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import antiregular as ar
from .coherent import (
    TruncationWarning, cs_eigen_check, cs_from_exponential, cs_vector, in_cs_domain, overlap,
)
from .hermite import (
    HermiteFamilyS, HermiteFamilyTwo, b_n_exact, hermite_cs_and_quantize, hermite_n,
    hermite_n_recurrence, hermite_nm, hermite_nm_table, hermite_orthogonality_s, rodrigues_nm,
)
from .linalg import (
    RQOperator, RQVector, ScaledOperator, adjoint, adjoint_defect, apply, complex_embedding,
    inner, matmul, operator_distance, scaled_apply,
)
from .observables import (
    classical_oscillator, differential_model_check, expectation, lower_symbols,
    momentum_witness, naive_momentum, number_as_euler_operator, number_operator,
    oscillator_algebra_check, oscillator_hamiltonian, position_operator, self_adjoint_defect,
)
from .quadrature import build_grid, moment_check
from .quantize import (
    Symbol, adjoint_pair_defect, analytic_Aq, analytic_Aqbar, commutator_check,
    quantize_uncertified, resolution_identity_check,
)
from .quaternion import (
    DEFAULT_TOL, I_UNIT, J_UNIT, K_UNIT, ONE, Quaternion, from_polar, polar_matrix, sigma_n,
    slice_decompose, to_matrix, to_polar, exp_pair,
)
from .slices import (
    canonical_commutation_check, classical_slice_hamiltonian, slice_operators,
    slice_resolution_check,
)

SUITE_NAMES = ("core-algebra", "hilbert-axioms", "cs", "quantize-canonical", "observables",
               "slice", "hermite-one", "hermite-two")

CS_TRUNC_MIN = 32  # coherent-state checks at |q| <= 1.5 need this many Fock states


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class Config:
    trunc_dim: int = 16
    radial_order: int | None = None
    theta_nodes: int | None = None
    phi_order: int | None = None
    psi_nodes: int | None = None
    tolerance: float = DEFAULT_TOL
    seed: int = 20240917

    def validate(self) -> "Config":
        if self.trunc_dim < 3:
            raise ConfigError("trunc-dim must be at least 3")
        for name in ("radial_order", "theta_nodes", "phi_order", "psi_nodes"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ConfigError(f"{name.replace('_', '-')} must be a positive integer")
        if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise ConfigError("tolerance must be a positive finite number")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        return self

    @property
    def cs_trunc(self) -> int:
        return max(self.trunc_dim, CS_TRUNC_MIN)

    def grid(self, n_trunc: int | None = None, degree: int = 0):
        return build_grid(n_trunc or self.trunc_dim, degree, radial_order=self.radial_order,
                          theta_nodes=self.theta_nodes, phi_order=self.phi_order,
                          psi_nodes=self.psi_nodes)

    def as_dict(self) -> dict:
        g = self.grid(degree=2)
        return {
            "trunc_dim": self.trunc_dim,
            "cs_trunc_dim": self.cs_trunc,
            "radial_order": self.radial_order,
            "theta_nodes": self.theta_nodes,
            "phi_order": self.phi_order,
            "psi_nodes": self.psi_nodes,
            "grid_sizes": g.sizes,
            "grid_certificate": g.certificate.as_dict(),
            "tolerance": self.tolerance,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    max_error: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.max_error <= self.tolerance)

    def as_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "max_error": self.max_error,
                "tolerance": self.tolerance, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    config: dict
    checks: list = field(default_factory=list)
    wall_ms: float = 0.0
    suites: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(s.passed for s in self.suites)

    def all_checks(self):
        for c in self.checks:
            yield self.suite, c
        for s in self.suites:
            yield from s.all_checks()

    def as_dict(self, with_time: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "config": self.config,
            "checks": [c.as_dict() for c in self.checks],
            "passed": self.passed,
        }
        if with_time:
            out["wall_ms"] = self.wall_ms
        if self.suites:
            out["suites"] = [s.as_dict(with_time) for s in self.suites]
        return out


def _witness(found: bool) -> float:
    return 0.0 if found else 1.0


def _qmax(a, b) -> float:
    return float(np.sqrt(np.sum((np.asarray(a) - np.asarray(b)) ** 2, axis=-1)).max())


def _rand_q(rng, n, scale=1.0) -> np.ndarray:
    return rng.normal(size=(n, 4)) * scale


def _rand_ball(rng, n, radius) -> list:
    """``n`` quaternions uniformly in the 4-ball of the given radius."""
    v = rng.normal(size=(n, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    r = radius * rng.uniform(size=(n, 1)) ** 0.25
    return [Quaternion.from_array(x) for x in v * r]


def _quiet(fn, *args, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        return fn(*args, **kwargs)


# ---------------------------------------------------------------------------
# suites

def suite_core_algebra(cfg: Config, rng) -> list:
    tol = cfg.tolerance
    checks = []
    checks.append(Check("ij=k", "i*j = -j*i = k", abs(I_UNIT * J_UNIT - K_UNIT)
                        + abs(J_UNIT * I_UNIT + K_UNIT), 0.0))
    checks.append(Check("(1+i)(1+j)", "expansion by the unit relations",
                        abs((ONE + I_UNIT) * (ONE + J_UNIT) - Quaternion(1, 1, 1, 1)), 0.0))
    qs = [Quaternion.from_array(x) for x in _rand_q(rng, 200)]
    ps = [Quaternion.from_array(x) for x in _rand_q(rng, 200)]
    hom = max(float(np.abs(to_matrix(p * q) - to_matrix(p) @ to_matrix(q)).max())
              for p, q in zip(ps, qs))
    checks.append(Check("matrix-homomorphism", "2x2 complex representation is multiplicative",
                        hom, 1e-13))
    det = max(abs(np.linalg.det(to_matrix(q)) - q.norm2()) / max(1.0, q.norm2()) for q in qs)
    checks.append(Check("det=|q|^2", "determinant of the matrix form", float(det), 1e-14))
    adj = max(float(np.abs(to_matrix(q.conjugate()) - to_matrix(q).conj().T).max()) for q in qs)
    checks.append(Check("conj=adjoint", "conjugation is the matrix adjoint", adj, 0.0))
    mult = max(abs(abs(p * q) - abs(p) * abs(q)) / max(1.0, abs(p) * abs(q))
               for p, q in zip(ps, qs))
    checks.append(Check("norm-multiplicative", "|pq| = |p||q|", float(mult), 1e-13))
    conj_rev = max(abs((p * q).conjugate() - q.conjugate() * p.conjugate()) for p, q in zip(ps, qs))
    checks.append(Check("conj-reverses-products", "conj(pq) = conj(q) conj(p)", conj_rev, 1e-13))

    polar_qs = [Quaternion.from_array(x) for x in _rand_q(rng, 1000)]
    rt = max(abs(from_polar(to_polar(q)) - q) for q in polar_qs)
    checks.append(Check("polar-round-trip", "four polar coordinate equations", rt, tol))
    pk = to_polar(K_UNIT)
    checks.append(Check("polar(k)", "k has r=1, theta=pi/2, phi=0",
                        max(abs(pk.r - 1), abs(pk.theta - math.pi / 2), abs(pk.phi)), 1e-15))
    from scipy.linalg import expm
    sig, exp_err = 0.0, 0.0
    for q in polar_qs[:200]:
        p = to_polar(q)
        s = sigma_n(p.phi, p.psi)
        sig = max(sig, float(np.abs(s @ s - np.eye(2)).max()), float(np.abs(s - s.conj().T).max()))
        exp_err = max(exp_err, float(np.abs(polar_matrix(p) - p.r * expm(1j * p.theta * s)).max()),
                      float(np.abs(polar_matrix(p) - to_matrix(q)).max()))
    checks.append(Check("sigma-involution", "sigma(n)^2 = 1 and sigma(n) is Hermitian", sig, 1e-14))
    checks.append(Check("polar-exponential", "exp(i theta sigma) = cos theta + i sin theta sigma",
                        exp_err, tol))

    sp_err = 0.0
    for q in qs:
        sp = slice_decompose(q)
        sp_err = max(sp_err, abs(sp.embed() - q), abs(sp.unit * sp.unit + ONE))
    for q, (x, y, u) in ((Quaternion(3, 4, 0, 0), (3, 4, I_UNIT)),
                         (Quaternion(2, 0, 2, 0), (2, 2, J_UNIT))):
        sp = slice_decompose(q)
        sp_err = max(sp_err, abs(sp.x - x), abs(sp.y - y), abs(sp.unit - u))
    real = slice_decompose(Quaternion(5, 0, 0, 0))
    if not (real.degenerate and real.y == 0.0 and real.unit == I_UNIT):
        sp_err = max(sp_err, 1.0)
    checks.append(Check("slice-decomposition", "q = x + yI with y >= 0 and I^2 = -1", sp_err, tol))

    comm = 0.0
    for q in qs[:50]:
        sp = slice_decompose(q)
        a, b = rng.normal(size=2)
        p = Quaternion.real(a) + sp.unit * b
        comm = max(comm, abs(p * q - q * p))
    checks.append(Check("slice-commutative", "elements of one slice commute", comm, tol))
    checks.append(Check("cross-slice-witness", "different slices do not commute",
                        _witness(abs(I_UNIT * J_UNIT - J_UNIT * I_UNIT) > tol), 0.0,
                        "p=i, q=j: pq-qp=2k"))

    e_err, bound_viol = 0.0, 0.0
    for q in qs[:50]:
        sp = slice_decompose(q)
        z1 = complex(*rng.normal(size=2))
        w = Quaternion.real(z1.real) + sp.unit * z1.imag
        zq = sp.as_complex()
        e = exp_pair(w, q, 1e-17)
        ez = np.exp(z1 * zq)
        target = Quaternion.real(ez.real) + sp.unit * ez.imag
        e_err = max(e_err, abs(e - target) / math.exp(abs(w) * abs(q)))
    for p, q in zip(ps[:50], qs[:50]):
        bound_viol = max(bound_viol, abs(exp_pair(p, q)) - math.exp(abs(p) * abs(q)))
    checks.append(Check("exp-pair-slice", "E(p,q) = exp(pq) inside a slice", e_err, tol,
                        "relative to the majorant exp(|p||q|)"))
    checks.append(Check("exp-pair-majorant", "|E(p,q)| <= exp(|p||q|)", max(bound_viol, 0.0), 0.0))
    checks.append(Check("exp-pair-zero", "E(0,q) = 1",
                        max(abs(exp_pair(Quaternion(), q) - ONE) for q in qs[:20]), 0.0))

    cul = 0.0
    for m in range(12):
        phi_m = ar.AntiRegularPoly([Quaternion() for _ in range(m)] + [ONE * (1 / math.sqrt(math.factorial(m)))])
        d = ar.cullen_derivative(phi_m)
        up = ar.multiply_by_conjugate_var(phi_m)
        cul = max(cul, abs(up.coefficient(m + 1) - ONE * (math.sqrt(m + 1) / math.sqrt(math.factorial(m + 1)))))
        if m:
            cul = max(cul, abs(d.coefficient(m - 1) - ONE * (math.sqrt(m) / math.sqrt(math.factorial(m - 1)))))
        else:
            cul = max(cul, 0.0 if d.degree == -1 else 1.0)
    checks.append(Check("cullen-ladder", "d/dqbar phi_m = sqrt(m) phi_{m-1}, qbar phi_m = sqrt(m+1) phi_{m+1}",
                        cul, tol))
    return checks


def suite_hilbert_axioms(cfg: Config, rng) -> list:
    N = cfg.trunc_dim
    tol = cfg.tolerance
    checks = []
    vecs = [RQVector(_rand_q(rng, N)) for _ in range(40)]
    scal = [Quaternion.from_array(x) for x in _rand_q(rng, 40)]
    rl = cs = herm = pos = add = 0.0
    for a in range(20):
        f, g, h, q = vecs[a], vecs[a + 20], vecs[(a + 7) % 40], scal[a]
        rl = max(rl, abs(inner(f, g.scale_right(q)) - inner(f, g) * q))
        herm = max(herm, abs(inner(f, g).conjugate() - inner(g, f)))
        add = max(add, abs(inner(f, g + h) - inner(f, g) - inner(f, h)))
        ff = inner(f, f)
        pos = max(pos, abs(Quaternion(0, ff.x1, ff.x2, ff.x3)), max(0.0, -ff.x0))
        cs = max(cs, abs(inner(f, g)) - f.norm() * g.norm())
    scale = max(v.norm() for v in vecs) ** 2
    checks.append(Check("inner-right-linear", "<f|gq> = <f|g>q", rl / scale, 1e-13))
    checks.append(Check("inner-hermitian", "conj<f|g> = <g|f>", herm / scale, 1e-13))
    checks.append(Check("inner-additive", "<f|g+h> = <f|g> + <f|h>", add / scale, 1e-13))
    checks.append(Check("inner-positive", "<f|f> real and >= 0", pos / scale, 1e-13))
    checks.append(Check("cauchy-schwarz", "|<u|v>| <= |u||v|", max(cs, 0.0), 1e-12))
    basis = max(abs(inner(RQVector.basis(N, m), RQVector.basis(N, n)) - ONE * float(m == n))
                for m in range(N) for n in range(N))
    checks.append(Check("orthonormal-basis", "<e_m|e_n> = delta_mn", basis, 0.0))

    adj = rlin = emb = 0.0
    for a in range(10):
        A = RQOperator(_rand_q(rng, N * N).reshape(N, N, 4))
        B = RQOperator(_rand_q(rng, N * N).reshape(N, N, 4))
        f, g, q = vecs[a], vecs[a + 10], scal[a]
        adj = max(adj, abs(inner(g, apply(A, f)) - inner(apply(adjoint(A), g), f)) / scale / N)
        rlin = max(rlin, (apply(A, f.scale_right(q)) - apply(A, f).scale_right(q)).max_abs() / N / scale)
        emb = max(emb, float(np.abs(complex_embedding(matmul(A, B))
                                    - complex_embedding(A) @ complex_embedding(B)).max()) / N)
    checks.append(Check("adjoint-relation", "<g|Af> = <A^dagger g|f>", adj, 1e-13))
    checks.append(Check("operator-right-linear", "A(fq) = (Af)q", rlin, 1e-13))
    checks.append(Check("complex-embedding", "quaternion matmul vs complex-embedding oracle", emb, 1e-13))
    A = RQOperator(_rand_q(rng, N * N).reshape(N, N, 4))
    checks.append(Check("adjoint-involution", "(A^dagger)^dagger = A",
                        operator_distance(adjoint(adjoint(A)), A), 0.0))
    checks.append(Check("ladder-adjoint", "A_q^dagger = A_qbar",
                        operator_distance(adjoint(analytic_Aq(N)), analytic_Aqbar(N)), 0.0))

    one = RQOperator.identity(1)
    lhs, rhs = adjoint_defect(Quaternion(0, 1, 2, 0), one, RQVector.from_quaternions([K_UNIT]),
                              RQVector.from_quaternions([J_UNIT]))
    err = max(abs(lhs - Quaternion(1, 0, 0, -2)), abs(rhs - Quaternion(1, 0, 0, 2)))
    checks.append(Check("scaled-adjoint-counterexample",
                        "alpha=i+2j on H, u=k, v=j gives the pair (1-2k, 1+2k)", err, 0.0,
                        f"lhs={list(lhs.components)} rhs={list(rhs.components)}"))
    real_gap = 0.0
    for a in range(10):
        alpha = Quaternion.real(float(rng.normal()))
        A = RQOperator(_rand_q(rng, N * N).reshape(N, N, 4))
        l, r = adjoint_defect(alpha, A, vecs[a], vecs[a + 10])
        real_gap = max(real_gap, abs(l - r) / scale / N)
    checks.append(Check("scaled-adjoint-real", "real multiples commute with the adjoint", real_gap, 1e-13))

    S = ScaledOperator(I_UNIT, RQOperator.identity(N))
    f = RQVector.basis(N, 0)
    gap = (scaled_apply(S, f.scale_right(J_UNIT)) - scaled_apply(S, f).scale_right(J_UNIT)).max_abs()
    checks.append(Check("scaled-not-right-linear", "(iO)(fj) differs from ((iO)f)j",
                        _witness(gap > tol), 0.0, f"gap={gap:.17g}"))
    Aqb = analytic_Aqbar(N)
    two = 0.0
    for q in scal[:10]:
        S = ScaledOperator(q.conjugate(), Aqb)
        out = scaled_apply(S, scaled_apply(S, RQVector.basis(N, 0)))
        target = RQVector.basis(N, 2, q * q * math.sqrt(2.0))
        two = max(two, (out - target).max_abs() / max(1.0, q.norm2()))
    checks.append(Check("scaled-two-step", "(qbar A_qbar)^2 e_0 = e_2 sqrt(2) q^2", two, tol))
    return checks


def suite_cs(cfg: Config, rng) -> list:
    N = cfg.cs_trunc
    checks = []
    labels = _rand_ball(rng, 50, 2.0)
    worst = worst_tail = 0.0
    for q in labels:
        g = _quiet(cs_vector, q, N)
        worst = max(worst, abs(inner(g.vector, g.vector).x0 - 1.0))
        worst_tail = max(worst_tail, g.tail_bound)
    checks.append(Check("cs-normalization", "<gamma_q|gamma_q> = 1 within the truncation tail, |q| <= 2",
                        worst, worst_tail + 1e-13, f"N={N} max_tail={worst_tail:.3g}"))
    checks.append(Check("cs-zero", "gamma_0 = e_0",
                        (cs_vector(Quaternion(), N).vector - RQVector.basis(N, 0)).max_abs(), 0.0))
    ps, qs = _rand_ball(rng, 50, 1.5), _rand_ball(rng, 50, 1.5)
    ov = herm = cs = 0.0
    for p, q in zip(ps, qs):
        direct = inner(_quiet(cs_vector, q, N).vector, _quiet(cs_vector, p, N).vector)
        o = overlap(p, q)
        ov = max(ov, abs(o - direct))
        herm = max(herm, abs(o.conjugate() - overlap(q, p)))
        cs = max(cs, abs(o) - 1.0)
    checks.append(Check("overlap-vs-inner", "closed-form overlap vs direct inner product, |p|,|q| <= 1.5",
                        ov, 1e-10, f"N={N}"))
    checks.append(Check("overlap-hermitian", "conj overlap(p,q) = overlap(q,p)", herm, 1e-13))
    checks.append(Check("overlap-bounded", "|overlap(p,q)| <= 1", max(cs, 0.0), 1e-13))
    checks.append(Check("overlap-diagonal", "overlap(q,q) = 1",
                        max(abs(overlap(q, q) - ONE) for q in qs), 1e-13))
    eig = max(cs_eigen_check(q, N) for q in _rand_ball(rng, 50, 1.0))
    checks.append(Check("cs-eigen", "A_q gamma_q = gamma_q q on safe components, |q| <= 1",
                        eig, 1e-12, f"N={N}"))
    expo = 0.0
    for q in _rand_ball(rng, 20, 1.0):
        expo = max(expo, (cs_from_exponential(q, N) - _quiet(cs_vector, q, N).vector).max_abs())
    checks.append(Check("cs-exponential", "gamma_q = exp(-|q|^2/2) exp(qbar A_qbar) e_0", expo, 1e-12))
    sl = 0.0
    for q in _rand_ball(rng, 10, 1.5):
        u = slice_decompose(q).unit.to_array()
        d = _quiet(cs_vector, q, N).data
        perp = d[:, 1:] - np.outer(d[:, 1:] @ u[1:], u[1:])
        sl = max(sl, float(np.abs(perp).max()))
    checks.append(Check("cs-slice", "components of gamma_q stay in the slice of q", sl, 1e-13))
    dom = 0.0 if (in_cs_domain(50.0, math.factorial)
                  and not in_cs_domain(1.1, lambda m: 1.0)
                  and in_cs_domain(0.9, lambda m: 1.0)) else 1.0
    checks.append(Check("cs-domain", "finiteness predicate: all of H for m!, unit disc for rho=1", dom, 0.0))
    return checks


def suite_quantize(cfg: Config, rng) -> list:
    N = cfg.trunc_dim
    tol = cfg.tolerance
    checks = []
    grid1 = cfg.grid(N, 1)
    grid2 = cfg.grid(N, 2)
    detail = f"grid {grid2.sizes} cert {grid2.certificate.as_dict()}"
    rq = quantize_uncertified(Symbol.q(), grid1, N)
    rqb = quantize_uncertified(Symbol.qbar(), grid1, N)
    checks.append(Check("quantize(q)=A_q", "superdiagonal sqrt(k+1)",
                        operator_distance(rq.operator, analytic_Aq(N)), tol,
                        f"certified={rq.certified}"))
    checks.append(Check("quantize(qbar)=A_qbar", "subdiagonal sqrt(k)",
                        operator_distance(rqb.operator, analytic_Aqbar(N)), tol,
                        f"certified={rqb.certified}"))
    r1 = quantize_uncertified(Symbol.constant(1.0), cfg.grid(N, 0), N)
    checks.append(Check("quantize(1)=identity", "A_1 is the identity",
                        operator_distance(r1.operator, RQOperator.identity(N)), tol,
                        f"certified={r1.certified}"))
    rabs = quantize_uncertified(Symbol.abs2(), grid2, N)
    s = N - 1
    H = oscillator_hamiltonian(N)
    ham = float(np.sqrt(np.sum((rabs.operator.data - H.data)[:s, :s] ** 2, axis=-1)).max())
    checks.append(Check("quantize(|q|^2)=N+1", "oscillator Hamiltonian on indices 0..N-2", ham, 1e-10,
                        detail))
    checks.append(Check("quantize(|q|^2)-self-adjoint", "real symbols give symmetric operators",
                        self_adjoint_defect(rabs.operator), tol))
    rep = commutator_check(N)
    checks.append(Check("commutator-safe", "[A_q, A_qbar] = 1 on indices 0..N-2 (exact arithmetic)",
                        rep.safe_defect, 0.0, f"float route {rep.float_defect:.3g}"))
    checks.append(Check("commutator-corner", "entry (N-1,N-1) = 1-N from the zero trace",
                        abs(rep.corner - rep.corner_expected) + abs(rep.trace), 0.0,
                        f"corner={rep.corner:.17g}"))
    checks.append(Check("ladder-products", "A_q A_qbar = diag(m+1), A_qbar A_q = diag(m) (exact)",
                        rep.product_defect, 0.0))
    Aq = analytic_Aq(N)
    e0 = apply(Aq, RQVector.basis(N, 0)).max_abs()
    checks.append(Check("A_q-vacuum", "A_q e_0 = 0 and (A_q)_{0,1}=1, (A_q)_{3,4}=2",
                        e0 + abs(Aq[0, 1] - ONE) + (abs(Aq[3, 4] - ONE * 2.0) if N > 4 else 0.0), 0.0))
    checks.append(Check("resolution-of-identity", "integral of |gamma_q><gamma_q| is the identity",
                        resolution_identity_check(cfg.grid(N, 0), N), tol))

    mgrid = build_grid(20, 0)
    mom = max(abs(moment_check(mgrid, m) - math.factorial(m)) / math.factorial(m) for m in range(21))
    checks.append(Check("moments", "int r^(2m) 2r exp(-r^2) dr = m! for m <= 20", mom, 1e-12,
                        f"radial nodes {mgrid.sizes['radial']}"))

    grid3 = cfg.grid(N, 3)
    c = Quaternion(0.5, 1.0, 2.0, -0.25)
    f = Symbol.polynomial([(2, c, 1), (0, Quaternion(0, 0, 1, 0), 1), (1, 2.0, 0)])
    checks.append(Check("adjoint-covariance", "A_f^dagger = A_conj(f) for q^a c qbar^b symbols",
                        adjoint_pair_defect(f, grid3, N) / N, 1e-13))
    band = 0.0
    for sym in (Symbol.polynomial([(2, 1.0, 0)]), Symbol.polynomial([(0, 1.0, 2)]),
                Symbol.polynomial([(2, 1.0, 1)])):
        band = max(band, quantize_uncertified(sym, cfg.grid(N, sym.degree), N).residual)
    checks.append(Check("band-pattern", "q^a lives on the a-th superdiagonal, qbar^b on the b-th subdiagonal",
                        band, tol))
    fine = build_grid(N, 2, radial_order=grid2.sizes["radial"] + 3,
                      theta_nodes=grid2.sizes["theta"] + 4, phi_order=grid2.sizes["phi"] + 2,
                      psi_nodes=grid2.sizes["psi"] + 2)
    refine = operator_distance(rabs.operator, quantize_uncertified(Symbol.abs2(), fine, N).operator)
    checks.append(Check("grid-refinement", "certified results do not change on a finer grid",
                        refine / N, 1e-13))
    return checks


def suite_observables(cfg: Config, rng) -> list:
    N = cfg.trunc_dim
    tol = cfg.tolerance
    checks = []
    Nop = number_operator(N)
    diag = operator_distance(Nop, RQOperator.from_real(np.diag(np.arange(N, dtype=float))))
    checks.append(Check("number-operator", "N e_k = e_k k", diag, tol))
    Hh = oscillator_hamiltonian(N)
    checks.append(Check("hamiltonian-spectrum", "N + 1 has spectrum n + 1",
                        operator_distance(Hh, RQOperator.from_real(np.diag(np.arange(1, N + 1, dtype=float)))),
                        tol))
    Q = position_operator(N)
    checks.append(Check("position-self-adjoint", "Q = Q^dagger", self_adjoint_defect(Q), 0.0))
    w = momentum_witness(N, tol)
    if w is None:
        checks.append(Check("momentum-witness", "naive momentum violates the adjoint relation", 1.0, 0.0))
    else:
        u, v, (lhs, rhs) = w
        a = int(np.flatnonzero(np.abs(u.data).sum(axis=1))[0])
        b = int(np.flatnonzero(np.abs(v.data).sum(axis=1))[0])
        P = naive_momentum(N)
        sl, sr = adjoint_defect(P.alpha, P.base, RQVector.basis(N, 0, J_UNIT), RQVector.basis(N, 1, K_UNIT))
        checks.append(Check("momentum-witness", "naive momentum violates the adjoint relation", 0.0, 0.0,
                            f"u=e_{a}*{list(u[a].components)} v=e_{b}*{list(v[b].components)} "
                            f"pair={list(lhs.components)} vs {list(rhs.components)}; "
                            f"pair u=e_0 j, v=e_1 k gives {list(sl.components)} vs {list(sr.components)}"))
    alg = oscillator_algebra_check(N)
    for name, val in alg.exact_defects.items():
        checks.append(Check(f"algebra:{name}", "Weyl-Heisenberg relations on truncation-safe indices",
                            val, 0.0, f"float route {alg.float_defects.get(name, float('nan')):.3g}"))
    dm = differential_model_check(N)
    checks.append(Check("cullen-model", "A_q = d/dqbar, A_qbar = qbar* on phi_m for all degrees < N",
                        dm.exact_defect, 0.0, f"float route {dm.float_defect:.3g}"))
    checks.append(Check("euler-operator", "qbar d/dqbar phi_m = m phi_m",
                        number_as_euler_operator(N), 0.0))

    NC = cfg.cs_trunc
    Nc = number_operator(NC)
    ls = max(abs(expectation(Nc, p) - ONE * float(p.norm2())) for p in _rand_ball(rng, 100, 1.5))
    checks.append(Check("lower-symbol-N", "<gamma_p|N|gamma_p> = |p|^2, |p| <= 1.5", ls, 1e-8, f"N={NC}"))
    reps = lower_symbols(Symbol.q(), _rand_ball(rng, 5, 1.0), cfg.grid(NC, 1), NC)
    checks.append(Check("lower-symbol-dual-path", "matrix route vs integral of Phi(p,q), f=q, |p| <= 1",
                        max(r.discrepancy for r in reps), 1e-8,
                        f"N={NC} certified={all(r.certified for r in reps)}"))
    zero = lower_symbols(Symbol.polynomial([(1, 1.0, 0), (2, 1.0, 1)]), [Quaternion()],
                         cfg.grid(N, 3), N)[0]
    checks.append(Check("lower-symbol-origin", "f(0)=0 gives lower symbol 0 at p=0",
                        abs(zero.matrix_value) + abs(zero.integral_value), tol))
    gap = max(abs(classical_oscillator(q) - ONE * float(q.norm2()))
              for q in (Quaternion.from_array(x) for x in _rand_q(rng, 10)))
    checks.append(Check("classical-oscillator-witness", "(qq^2 + pp^2)/2 differs from |q|^2 off the i-slice",
                        _witness(gap > tol), 0.0, f"max gap {gap:.3g}"))
    return checks


def suite_slice(cfg: Config, rng) -> list:
    N = cfg.trunc_dim
    tol = cfg.tolerance
    checks = []
    units = {"i": I_UNIT, "j": J_UNIT,
             "(i+j+k)/sqrt3": Quaternion(0.0, 1 / math.sqrt(3), 1 / math.sqrt(3), 1 / math.sqrt(3))}
    res_vals = {}
    for name, u in units.items():
        rep = canonical_commutation_check(u, N)
        checks.append(Check(f"ccr[{name}]", "[Q_I, P_I] = I on indices 0..N-2",
                            max(rep.commutator_defect, rep.embedded_defect), 1e-13))
        offset = float(np.abs(rep.spectrum - (np.arange(N - 1) + 0.5)).max())
        checks.append(Check(f"hamiltonian[{name}]", "(Q_I^2 + P_I^2)/2 = N_I + 1/2, spectrum n + 1/2",
                            max(rep.hamiltonian_defect, offset), 1e-13))
        checks.append(Check(f"self-adjoint[{name}]", "Q_I and P_I are self-adjoint",
                            rep.self_adjoint_defect, 0.0))
        res_vals[name] = slice_resolution_check(u, N)
        checks.append(Check(f"slice-resolution[{name}]", "slice coherent states resolve the identity",
                            res_vals[name], tol))
        cl = 0.0
        for _ in range(20):
            x, y = rng.normal(size=2)
            q = Quaternion.real(x) + u * y
            cl = max(cl, abs(classical_slice_hamiltonian(q, u) - ONE * float(q.norm2())))
        checks.append(Check(f"classical-hamiltonian[{name}]", "(qq_I^2 + pp_I^2)/2 = |q_I|^2", cl, tol))
    Q, P, _ = slice_operators(I_UNIT, N)
    A = np.diag(np.sqrt(np.arange(1, N, dtype=float)), 1)
    std = max(float(np.abs(Q.data - (A + A.T) / math.sqrt(2)).max()),
              float(np.abs(P.data - (-1j / math.sqrt(2)) * (A - A.T)).max()))
    checks.append(Check("i-slice-is-complex", "I = i gives the standard complex construction", std, 0.0))
    spread = max(res_vals.values()) - min(res_vals.values())
    checks.append(Check("slice-invariance", "resolution diagnostics agree across slices", spread, tol))
    checks.append(Check("slice-resolution-N1", "N=1 gives the scalar 1",
                        slice_resolution_check(J_UNIT, 1), tol))
    return checks


def suite_hermite_one(cfg: Config, rng) -> list:
    tol = cfg.tolerance
    checks = []
    G = hermite_orthogonality_s(0.5, 6)
    eye = np.zeros_like(G)
    eye[..., 0] = np.eye(7)
    checks.append(Check("gram-s=0.5", "h_{n,s} orthonormal for n <= 6", _qmax(G, eye), 1e-8))
    for s in (0.1, 0.9):
        Gs = hermite_orthogonality_s(s, 6)
        checks.append(Check(f"gram-s={s}", "h_{n,s} orthonormal for n <= 6", _qmax(Gs, eye), 1e-8))
    import sympy
    ratio = 0.0
    for s in (sympy.Rational(1, 2), sympy.Rational(1, 10), sympy.Rational(9, 10)):
        c = 2 * (1 + s) / (1 - s)
        for n in range(12):
            d = sympy.simplify(b_n_exact(n + 1, s) / b_n_exact(n, s) - c * (n + 1))
            ratio = max(ratio, abs(float(d)))
    checks.append(Check("b_n-ratio", "b_{n+1}/b_n = 2(1+s)/(1-s) (n+1), exact", ratio, 0.0))
    checks.append(Check("b_0(1/2)", "b_0(1/2) = pi sqrt 2",
                        float(abs(b_n_exact(0, sympy.Rational(1, 2)) - sympy.pi * sympy.sqrt(2))), 0.0))
    qs = _rand_ball(rng, 30, 2.0)
    rec = low = 0.0
    for q in qs:
        for n in range(13):
            a, b = hermite_n(n, q), hermite_n_recurrence(n, q)
            rec = max(rec, abs(a - b) / max(1.0, abs(a)))
        low = max(low, abs(hermite_n(1, q) - q * 2.0), abs(hermite_n(2, q) - (q * q * 4.0 - ONE * 2.0)))
    checks.append(Check("sum-vs-recurrence", "H_n sum form vs three-term recurrence, n <= 12, |q| <= 2",
                        rec, tol, "relative to max(1, |H_n|)"))
    checks.append(Check("low-order", "H_1 = 2q, H_2 = 4q^2 - 2", low, 1e-13))
    from scipy.special import eval_hermite
    real = max(abs(hermite_n(n, Quaternion.real(x)).x0 - eval_hermite(n, x)) / max(1.0, abs(eval_hermite(n, x)))
               for n in range(10) for x in (-1.3, 0.2, 1.7))
    checks.append(Check("real-axis", "H_n on real q matches the classical Hermite polynomial", real, tol))
    fam = HermiteFamilyS(0.5)
    pts = np.array([q.to_array() for q in _rand_ball(rng, 10, 1.5)])
    ks = fam.kernel_series(pts, 200)
    z_im = np.linalg.norm(pts[:, 1:], axis=1)
    closed = fam.kernel(pts[:, 0], z_im)
    checks.append(Check("kernel-closed-form", "sum |h_n|^2 = (1-s^2)/(2 pi s) exp((1-s)x^2 + (1/s-1)y^2)",
                        float(np.max(np.abs(ks[:, 0] - closed) / closed)), 1e-10))
    checks.append(Check("kernel-scalar", "the kernel is a real multiple of the identity",
                        float(np.max(np.linalg.norm(ks[:, 1:], axis=1) / closed)), 1e-13))
    hq = hermite_cs_and_quantize(fam, n_trunc=cfg.trunc_dim)
    checks.append(Check("A_1[s]", "f = 1 quantizes to the identity", hq.identity_defect, 1e-10))
    checks.append(Check("adjoint[s]", "A_qbar = A_q^dagger", hq.adjoint_defect, 1e-10))
    checks.append(Check("bands[s]", "A_q is tridiagonal with zero diagonal", hq.band_defect, 1e-10))
    return checks


def suite_hermite_two(cfg: Config, rng) -> list:
    N = cfg.trunc_dim
    tol = cfg.tolerance
    checks = []
    qs = _rand_ball(rng, 50, 2.0)
    h11 = max(abs(hermite_nm(1, 1, q) - ONE * (float(q.norm2()) - 1.0)) for q in qs)
    checks.append(Check("H_{1,1}", "H_{1,1} = |q|^2 - 1", h11, tol))
    low = max(abs(hermite_nm(0, 0, q) - ONE) + abs(hermite_nm(0, 1, q) - q) for q in qs)
    checks.append(Check("H_{0,0},H_{0,1}", "H_{0,0} = 1, H_{0,1} = q", low, 0.0))
    rod = 0.0
    for q in qs[:10]:
        T = hermite_nm_table(4, 4, q.to_array())
        for n in range(5):
            for m in range(5):
                ref = rodrigues_nm(n, m, q)
                rod = max(rod, abs(Quaternion.from_array(T[n, m]) - ref) / max(1.0, abs(ref)))
    checks.append(Check("rodrigues-oracle", "recurrence vs symbolic Rodrigues derivative, n,m <= 4", rod, tol))
    fam = HermiteFamilyTwo(0)
    pts = np.array([q.to_array() for q in qs])
    ks = fam.kernel_series(pts, 60)
    closed = fam.kernel(pts)
    checks.append(Check("kernel-60-terms", "sum_m h_{0,m} conj(h_{0,m}) = exp(|q|^2), |q| <= 2",
                        float(np.max(np.abs(ks[:, 0] - closed) / closed
                                     + np.linalg.norm(ks[:, 1:], axis=1) / closed)), 1e-8))
    for n in (0, 1, 2):
        hq = hermite_cs_and_quantize(HermiteFamilyTwo(n), n_trunc=N)
        checks.append(Check(f"A_1[n={n}]", "f = 1 quantizes to the identity", hq.identity_defect, 1e-10))
        checks.append(Check(f"adjoint[n={n}]", "A_qbar = A_q^dagger", hq.adjoint_defect, 1e-10))
        checks.append(Check(f"bands[n={n}]", "A_q has a single off-diagonal band", hq.band_defect, 1e-10))
        checks.append(Check(f"kernel[n={n}]", "kernel series vs exp(|q|^2)", hq.normalization_defect, 1e-10))
        if n == 0:
            red = max(operator_distance(hq.Aq, analytic_Aqbar(N)),
                      operator_distance(hq.Aqbar, analytic_Aq(N)))
            checks.append(Check("n=0-reduction", "n = 0 family reproduces the canonical ladder pair",
                                red, 1e-10, "H_{0,m} = q^m, so the family's A_q is the canonical A_qbar"))
    return checks


SUITES: dict[str, Callable] = {
    "core-algebra": suite_core_algebra,
    "hilbert-axioms": suite_hilbert_axioms,
    "cs": suite_cs,
    "quantize-canonical": suite_quantize,
    "observables": suite_observables,
    "slice": suite_slice,
    "hermite-one": suite_hermite_one,
    "hermite-two": suite_hermite_two,
}


def run_suite(name: str, config: Config | None = None) -> SuiteReport:
    """Run one suite (or ``"all"``) and collect its checks."""
    config = (config or Config()).validate()
    if name == "all":
        t0 = time.perf_counter()
        subs = [run_suite(n, config) for n in SUITE_NAMES]
        return SuiteReport("all", config.as_dict(), [], (time.perf_counter() - t0) * 1e3, subs)
    if name not in SUITES:
        raise KeyError(name)
    rng = np.random.default_rng([config.seed, SUITE_NAMES.index(name)])
    t0 = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        checks = SUITES[name](config, rng)
    return SuiteReport(name, config.as_dict(), checks, (time.perf_counter() - t0) * 1e3)


# ---------------------------------------------------------------------------
# serialisation

def _num(x) -> str:
    x = float(x)
    if math.isnan(x):
        return '"NaN"'
    if math.isinf(x):
        return '"Infinity"' if x > 0 else '"-Infinity"'
    return format(x, ".17g")


def _json(obj, indent: int = 0) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, str):
        import json
        return json.dumps(obj)
    if isinstance(obj, Quaternion):
        return "[" + ", ".join(_num(c) for c in obj.components) + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{_json(str(k))}: {_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[\n" + ",\n".join(pad + _json(v, indent + 1) for v in obj) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


CSV_FIELDS = ("suite", "id", "anchor", "max_error", "tolerance", "passed", "detail")


def emit_report(report: SuiteReport, fmt: str = "json") -> bytes:
    """Serialise a report as ``json``, ``csv`` or ``text``."""
    if fmt == "json":
        return (_json(report.as_dict()) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for suite, c in report.all_checks():
            w.writerow([suite, c.id, c.anchor, format(c.max_error, ".17g"),
                        format(c.tolerance, ".17g"), str(c.passed).lower(), c.detail])
        return buf.getvalue().encode()
    if fmt == "text":
        lines = [f"suite {report.suite}: {'PASS' if report.passed else 'FAIL'} ({report.wall_ms:.0f} ms)"]
        for suite, c in report.all_checks():
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {suite}/{c.id}: "
                         f"err={c.max_error:.3g} tol={c.tolerance:.3g}  ({c.anchor})")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")
