"""
Number operator, oscillator Hamiltonian, position and momentum, the
Weyl-Heisenberg relations, lower symbols and the Cullen-derivative model of
the ladder operators.

Identities that a finite matrix cannot satisfy in full (anything touching the
highest retained Fock state) are asserted only on the indices the truncation
leaves intact; each check documents its safe range.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .antiregular import AntiRegularPoly, cullen_derivative, multiply_by_conjugate_var
from .coherent import TruncationWarning, cs_vector, truncation_tail
from .linalg import (
    RQOperator, RQVector, ScaledOperator, adjoint, adjoint_defect, apply, commutator,
    inner, matmul, operator_distance,
)
from .quadrature import QuadratureGrid, build_grid, warn_if_uncertified
from .quantize import Symbol, analytic_Aq, analytic_Aqbar, exact_ladders
from .quaternion import (
    I_UNIT, J_UNIT, K_UNIT, ONE, Quaternion, exp_pair_array, qconj, qmul,
)

SQRT2 = math.sqrt(2.0)


def number_operator(n_trunc: int) -> RQOperator:
    """``N = A_qbar A_q``; diagonal ``0, 1, ..., N-1``."""
    return matmul(analytic_Aqbar(n_trunc), analytic_Aq(n_trunc))


def oscillator_hamiltonian(n_trunc: int) -> RQOperator:
    """``N + 1`` with spectrum ``n + 1``."""
    return number_operator(n_trunc) + RQOperator.identity(n_trunc)


def position_operator(n_trunc: int) -> RQOperator:
    """``Q = (A_q + A_qbar) / sqrt(2)``."""
    return (analytic_Aq(n_trunc) + analytic_Aqbar(n_trunc)).real_scale(1 / SQRT2)


def naive_momentum(n_trunc: int) -> ScaledOperator:
    """``(-i / sqrt(2)) (A_q - A_qbar)`` kept as a scaled operator; it is not self-adjoint."""
    return ScaledOperator(I_UNIT * (-1 / SQRT2), analytic_Aq(n_trunc) - analytic_Aqbar(n_trunc))


_UNITS = (ONE, I_UNIT, J_UNIT, K_UNIT)


def momentum_witness(n_trunc: int, tol: float = 1e-12):
    """Search basis-scaled vectors ``u = e_a s``, ``v = e_b t`` (``s, t`` in 1, i, j, k)
    for a pair where the naive adjoint rule fails on the naive momentum.

    Returns ``(u, v, (lhs, rhs))`` for the first hit in lexicographic order.
    """
    P = naive_momentum(n_trunc)
    for a, b in itertools.product(range(n_trunc), repeat=2):
        for s, t in itertools.product(_UNITS, repeat=2):
            u = RQVector.basis(n_trunc, a, s)
            v = RQVector.basis(n_trunc, b, t)
            lhs, rhs = adjoint_defect(P.alpha, P.base, u, v)
            if abs(lhs - rhs) > tol:
                return u, v, (lhs, rhs)
    return None


def classical_oscillator(q: Quaternion) -> Quaternion:
    """``(qq**2 + pp**2) / 2`` with ``qq = (q + conj q)/sqrt 2``, ``pp = -i (q - conj q)/sqrt 2``."""
    qq = (q + q.conjugate()) * (1 / SQRT2)
    pp = I_UNIT * (-1 / SQRT2) * (q - q.conjugate())
    return (qq * qq + pp * pp) * 0.5


# ---------------------------------------------------------------------------
# lower symbols

def expectation(A: RQOperator, p: Quaternion) -> Quaternion:
    """``<gamma_p|A|gamma_p>`` with the coherent state truncated to ``A.dim``."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        g = cs_vector(p, A.dim).vector
    return inner(g, apply(A, g))


@dataclass(frozen=True)
class LowerSymbolReport:
    label: Quaternion
    matrix_value: Quaternion
    integral_value: Quaternion
    discrepancy: float
    tail_bound: float
    certified: bool


def lower_symbol(f: Symbol, p: Quaternion, grid: QuadratureGrid | None = None,
                 n_trunc: int = 32) -> LowerSymbolReport:
    """Lower symbol of ``A_f`` at ``p`` by two routes.

    Matrix route: ``<gamma_p|A_f|gamma_p>`` with ``A_f`` from `quantize`.
    Integral route: ``int Phi(p, q) dvarsigma`` with
    ``Phi = exp(-|q|^2-|p|^2) E(conj p, q) f(q) E(conj q, p)``, both series cut
    at the truncation order so the quadrature stays exact.
    """
    return lower_symbols(f, [p], grid, n_trunc)[0]


def lower_symbols(f: Symbol, points, grid: QuadratureGrid | None = None,
                  n_trunc: int = 32) -> list:
    """`lower_symbol` at several labels, quantizing ``f`` only once."""
    from .quantize import quantize

    if grid is None:
        grid = build_grid(n_trunc, f.degree)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        A = quantize(f, grid, n_trunc).operator
    certified = f.is_polynomial and warn_if_uncertified(grid, n_trunc, f.degree)
    q, w = grid.nodes()
    fq = f(q)
    reports = []
    for p in points:
        matrix_value = expectation(A, p)
        pa = p.to_array()
        left = exp_pair_array(qconj(pa), q, n_trunc - 1)
        right = exp_pair_array(qconj(q), pa, n_trunc - 1)
        phi = qmul(qmul(left, fq), right)
        integral = np.sum(phi * w[:, None], axis=0) * math.exp(-float(p.norm2()))
        integral_value = Quaternion.from_array(integral)
        reports.append(LowerSymbolReport(
            label=p,
            matrix_value=matrix_value,
            integral_value=integral_value,
            discrepancy=abs(matrix_value - integral_value),
            tail_bound=truncation_tail(float(p.norm2()), n_trunc),
            certified=bool(certified),
        ))
    return reports


berezin_transform = lower_symbol


# ---------------------------------------------------------------------------
# oscillator algebra

@dataclass(frozen=True)
class AlgebraReport:
    n_trunc: int
    exact_defects: dict   # identity name -> exact max defect on the safe range
    float_defects: dict   # same identities in quaternion floating point

    @property
    def passed(self) -> bool:
        return all(v == 0.0 for v in self.exact_defects.values())


def _exact_max(M) -> float:
    return max((abs(float(x)) for x in M), default=0.0)


def oscillator_algebra_check(n_trunc: int) -> AlgebraReport:
    """``[N, A_q] = -A_q``, ``[N, A_qbar] = A_qbar`` and the product displays.

    Safe range: entries whose row and column are both below ``N-1``.
    """
    if n_trunc < 3:
        raise ValueError("n_trunc must be >= 3")
    import sympy
    s = n_trunc - 1
    A, Ad = exact_ladders(n_trunc)
    Nop = Ad * A
    k = np.arange(n_trunc)
    NA_target = sympy.zeros(n_trunc, n_trunc)
    AN_target = sympy.zeros(n_trunc, n_trunc)
    for m in range(n_trunc - 1):
        NA_target[m, m + 1] = m * sympy.sqrt(m + 1)
        AN_target[m, m + 1] = (m + 1) * sympy.sqrt(m + 1)
    safe = lambda M: M[:s, :s]  # noqa: E731
    exact = {
        "[N,Aq]+Aq": _exact_max(safe(Nop * A - A * Nop + A)),
        "[N,Aqbar]-Aqbar": _exact_max(safe(Nop * Ad - Ad * Nop - Ad)),
        "[Aq,Aqbar]-1": _exact_max(safe(A * Ad - Ad * A - sympy.eye(n_trunc))),
        "N*Aq": _exact_max(safe(Nop * A - NA_target)),
        "Aq*N": _exact_max(safe(A * Nop - AN_target)),
        "N-diag": _exact_max(Nop - sympy.diag(*range(n_trunc))),
    }
    Aq, Aqb = analytic_Aq(n_trunc), analytic_Aqbar(n_trunc)
    Nf = number_operator(n_trunc)
    fsafe = lambda X: X.data[:s, :s]  # noqa: E731
    flt = {
        "[N,Aq]+Aq": float(np.abs(fsafe(commutator(Nf, Aq) + Aq)).max()),
        "[N,Aqbar]-Aqbar": float(np.abs(fsafe(commutator(Nf, Aqb) - Aqb)).max()),
        "[Aq,Aqbar]-1": float(np.abs(fsafe(commutator(Aq, Aqb) - RQOperator.identity(n_trunc))).max()),
        "N-diag": float(np.abs(Nf.data[..., 0] - np.diag(k)).max() + np.abs(Nf.data[..., 1:]).max()),
    }
    return AlgebraReport(n_trunc, exact, flt)


# ---------------------------------------------------------------------------
# ladder operators as Cullen derivative / multiplication by conj(q)

def vector_to_poly(coeffs, exact: bool = False) -> AntiRegularPoly:
    """``sum_m e_m c_m -> sum_m phi_m c_m`` with ``phi_m = conj(q)**m / sqrt(m!)``."""
    if exact:
        import sympy
        return AntiRegularPoly([c * (1 / sympy.sqrt(sympy.factorial(m))) for m, c in enumerate(coeffs)])
    return AntiRegularPoly([c * (1 / math.sqrt(math.factorial(m))) for m, c in enumerate(coeffs)])


def poly_to_vector(f: AntiRegularPoly, n_trunc: int, exact: bool = False) -> list:
    if exact:
        import sympy
        root = lambda m: sympy.sqrt(sympy.factorial(m))  # noqa: E731
    else:
        root = lambda m: math.sqrt(math.factorial(m))  # noqa: E731
    return [f.coefficient(m) * root(m) for m in range(n_trunc)]


def _apply_exact(M, vec):
    """Sympy matrix (real entries) acting on a list of `Quaternion`."""
    n = len(vec)
    return [sum((vec[l] * M[m, l] for l in range(n) if M[m, l] != 0), Quaternion(0, 0, 0, 0))
            for m in range(n)]


@dataclass(frozen=True)
class DifferentialModelReport:
    n_trunc: int
    exact_defect: float   # over every basis vector e_m u, u in {1, i, j, k}
    float_defect: float

    @property
    def passed(self) -> bool:
        return self.exact_defect == 0.0


def differential_model_check(n_trunc: int) -> DifferentialModelReport:
    """Under ``e_m <-> phi_m``, ``A_q`` is the Cullen derivative in ``conj(q)`` and
    ``A_qbar`` is multiplication by ``conj(q)``, for every degree below ``N``.

    Multiplication raises the degree; the image of ``e_{N-1}`` falls outside the
    truncated space, which the matrix drops as well.
    """
    if n_trunc < 2:
        raise ValueError("n_trunc must be >= 2")
    import sympy
    A, Ad = exact_ladders(n_trunc)
    units = [Quaternion(*(sympy.Integer(x) for x in u.components)) for u in _UNITS]
    exact = 0.0
    for m in range(n_trunc):
        for u in units:
            vec = [u if k == m else Quaternion(0, 0, 0, 0) for k in range(n_trunc)]
            f = vector_to_poly(vec, exact=True)
            via_d = poly_to_vector(cullen_derivative(f), n_trunc, exact=True)
            via_mul = poly_to_vector(multiply_by_conjugate_var(f), n_trunc, exact=True)
            for lhs, rhs in ((_apply_exact(A, vec), via_d), (_apply_exact(Ad, vec), via_mul)):
                for x, y in zip(lhs, rhs):
                    for c in (x - y).components:
                        if c != 0:  # sympy canonicalises integer square roots, so 0 is literal
                            exact = max(exact, abs(float(sympy.simplify(c))))

    Aq, Aqb = analytic_Aq(n_trunc), analytic_Aqbar(n_trunc)
    flt = 0.0
    rng = np.random.default_rng(0)
    vec = rng.normal(size=(n_trunc, 4))
    qs = [Quaternion.from_array(v) for v in vec]
    f = vector_to_poly(qs)
    for op, route in ((Aq, cullen_derivative), (Aqb, multiply_by_conjugate_var)):
        lhs = apply(op, RQVector(vec)).data
        rhs = np.array([c.to_array() for c in poly_to_vector(route(f), n_trunc)])
        flt = max(flt, float(np.abs(lhs - rhs).max()))
    return DifferentialModelReport(n_trunc, exact, flt)


def number_as_euler_operator(n_trunc: int, exact: bool = True):
    """``conj(q) d/dconj(q)`` on ``phi_m`` against ``m phi_m``; returns the max defect."""
    worst = 0.0
    for m in range(n_trunc):
        e = [Quaternion(1, 0, 0, 0) if k == m else Quaternion(0, 0, 0, 0) for k in range(n_trunc)]
        f = vector_to_poly(e, exact=exact)
        g = multiply_by_conjugate_var(cullen_derivative(f))
        out = poly_to_vector(g, n_trunc, exact=exact)
        for k, c in enumerate(out):
            target = m if k == m else 0
            d = c.x0 - target
            worst = max(worst, abs(float(d)))
            for x in c.vector:
                worst = max(worst, abs(float(x)))
    return worst


def self_adjoint_defect(A: RQOperator) -> float:
    return operator_distance(A, adjoint(A))
