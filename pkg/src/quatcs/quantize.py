"""
Coherent-state quantization ``f -> A_f`` on a truncated Fock basis.

Matrix elements are

    (A_f)_{ml} = int exp(-|q|**2) q**m f(q) conj(q)**l / sqrt(m! l!) dvarsigma,

with ``f`` sitting between the ket and the bra (the right scalar multiple of
the coherent state), evaluated node by node in quaternion arithmetic.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .linalg import RQOperator, adjoint, commutator, operator_distance
from .quadrature import QuadratureGrid, build_grid, warn_if_uncertified
from .quaternion import Quaternion, as_qarray, qconj, qmul, qpowers, MULT_TABLE

_NONZERO_PAIRS = [(a, b, c, MULT_TABLE[a, b, c])
                  for a in range(4) for b in range(4) for c in range(4) if MULT_TABLE[a, b, c]]


# ---------------------------------------------------------------------------
# symbols

@dataclass(frozen=True)
class Monomial:
    a: int            # power of q on the left
    c: Quaternion     # coefficient
    b: int            # power of conj(q) on the right

    @property
    def degree(self) -> int:
        return self.a + self.b


@dataclass(frozen=True)
class Symbol:
    """Classical observable: ``sum q**a c conj(q)**b`` or an opaque callable.

    A callable receives an ``(n, 4)`` array of quaternion nodes and returns
    an ``(n, 4)`` array (or ``(n,)`` for real-valued functions).
    """

    monomials: tuple = ()
    func: Callable | None = field(default=None, compare=False)

    @classmethod
    def polynomial(cls, terms: Sequence) -> "Symbol":
        mons = []
        for t in terms:
            a, c, b = t
            if not isinstance(c, Quaternion):
                c = Quaternion.from_array(as_qarray(c)) if np.ndim(c) else Quaternion.real(float(c))
            mons.append(Monomial(int(a), c, int(b)))
        return cls(tuple(mons))

    @classmethod
    def constant(cls, c=1.0) -> "Symbol":
        return cls.polynomial([(0, c, 0)])

    @classmethod
    def q(cls) -> "Symbol":
        return cls.polynomial([(1, 1.0, 0)])

    @classmethod
    def qbar(cls) -> "Symbol":
        return cls.polynomial([(0, 1.0, 1)])

    @classmethod
    def abs2(cls) -> "Symbol":
        return cls.polynomial([(1, 1.0, 1)])

    @classmethod
    def from_callable(cls, f: Callable) -> "Symbol":
        return cls((), f)

    @property
    def is_polynomial(self) -> bool:
        return self.func is None

    @property
    def degree(self) -> int:
        if not self.is_polynomial:
            return 0
        return max((m.degree for m in self.monomials), default=0)

    def conjugate(self) -> "Symbol":
        """Pointwise conjugate: ``q**a c conj(q)**b -> q**b conj(c) conj(q)**a``."""
        if not self.is_polynomial:
            f = self.func
            return Symbol.from_callable(lambda q: _as_quaternion_values(f(q)) * [1, -1, -1, -1])
        return Symbol(tuple(Monomial(m.b, m.c.conjugate(), m.a) for m in self.monomials))

    def __add__(self, other: "Symbol") -> "Symbol":
        if self.is_polynomial and other.is_polynomial:
            return Symbol(self.monomials + other.monomials)
        f, g = self, other
        return Symbol.from_callable(lambda q: f(q) + g(q))

    def __call__(self, q) -> np.ndarray:
        q = as_qarray(q)
        if not self.is_polynomial:
            return _as_quaternion_values(self.func(q))
        top = max((max(m.a, m.b) for m in self.monomials), default=0)
        pw = qpowers(q, top + 1)
        out = np.zeros(q.shape)
        for m in self.monomials:
            term = qmul(qmul(pw[..., m.a, :], m.c.to_array()), qconj(pw[..., m.b, :]))
            out += term
        return out

    def expand_at(self, q: Quaternion) -> Quaternion:
        """Scalar evaluation with `Quaternion` arithmetic, the reference for `__call__`."""
        total = Quaternion(0.0, 0.0, 0.0, 0.0)
        for m in self.monomials:
            total = total + q ** m.a * m.c * q.conjugate() ** m.b
        return total


def _as_quaternion_values(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape[-1:] == (4,):
        return v
    out = np.zeros(v.shape + (4,))
    out[..., 0] = v
    return out


# ---------------------------------------------------------------------------
# integration engine

def sandwich_integral(B: np.ndarray, fvals: np.ndarray, w: np.ndarray) -> np.ndarray:
    """``sum_n w_n B[n, m] f_n conj(B[n, l])`` as an ``(N, N, 4)`` array.

    ``B[n, m]`` is the ket coefficient ``<e_m|eta_q>`` (unnormalised) at node ``n``.
    """
    left = qmul(B, fvals[:, None, :]) * w[:, None, None]
    right = qconj(B)
    N = B.shape[1]
    out = np.zeros((N, N, 4))
    for a, b, c, s in _NONZERO_PAIRS:
        out[:, :, c] += s * (left[:, :, a].T @ right[:, :, b])
    return out


def canonical_ket_coefficients(q: np.ndarray, n_trunc: int) -> np.ndarray:
    """``q**m / sqrt(m!)`` for ``m < n_trunc`` at every node."""
    pw = qpowers(q, n_trunc)
    norms = np.sqrt([float(math.factorial(m)) for m in range(n_trunc)])
    return pw / norms[:, None]


@dataclass(frozen=True, eq=False)
class QuantizationResult:
    operator: RQOperator
    certificate: dict
    certified: bool
    residual: float        # largest entry outside the monomial band pattern (nan for callables)

    @property
    def matrix(self) -> np.ndarray:
        return self.operator.data


def band_pattern(symbol: Symbol, n_trunc: int) -> np.ndarray:
    """Boolean mask of entries allowed to be nonzero for a polynomial symbol."""
    mask = np.zeros((n_trunc, n_trunc), dtype=bool)
    idx = np.arange(n_trunc)
    for mon in symbol.monomials:
        off = mon.a - mon.b
        rows = idx[(idx + off >= 0) & (idx + off < n_trunc)]
        mask[rows, rows + off] = True
        if mon.a == 0 and mon.b == 0:
            mask[0, 0] = True
    return mask


def quantize(f: Symbol, grid: QuadratureGrid | None = None, n_trunc: int = 16) -> QuantizationResult:
    """Quantize ``f`` on the first ``n_trunc`` Fock states."""
    if grid is None:
        grid = build_grid(n_trunc, f.degree)
    certified = f.is_polynomial and warn_if_uncertified(grid, n_trunc, f.degree)
    q, w = grid.nodes()
    B = canonical_ket_coefficients(q, n_trunc)
    A = sandwich_integral(B, f(q), w)
    if f.is_polynomial:
        mask = band_pattern(f, n_trunc)
        off = np.sqrt(np.sum(A ** 2, axis=-1))[~mask]
        residual = float(off.max()) if off.size else 0.0
    else:
        residual = float("nan")
    return QuantizationResult(RQOperator(A), grid.certificate.as_dict(), bool(certified), residual)


# ---------------------------------------------------------------------------
# closed-form ladder operators and checks

def analytic_Aq(n_trunc: int) -> RQOperator:
    """Annihilation operator: ``sqrt(k+1)`` at ``(k, k+1)``."""
    return RQOperator.from_real(np.diag(np.sqrt(np.arange(1, n_trunc, dtype=float)), 1))


def analytic_Aqbar(n_trunc: int) -> RQOperator:
    """Creation operator: ``sqrt(k+1)`` at ``(k+1, k)``."""
    return RQOperator.from_real(np.diag(np.sqrt(np.arange(1, n_trunc, dtype=float)), -1))


def resolution_identity_check(grid: QuadratureGrid | None, n_trunc: int) -> float:
    """Max entrywise deviation of ``A_1`` from the identity."""
    A = quantize(Symbol.constant(1.0), grid, n_trunc).operator
    return operator_distance(A, RQOperator.identity(n_trunc))


def exact_ladders(n_trunc: int):
    """Annihilation and creation matrices with exact ``sqrt`` entries (sympy)."""
    import sympy
    A = sympy.zeros(n_trunc, n_trunc)
    for k in range(n_trunc - 1):
        A[k, k + 1] = sympy.sqrt(k + 1)
    return A, A.T


@dataclass(frozen=True)
class CommutatorReport:
    n_trunc: int
    safe_defect: float          # exact max |[A_q, A_qbar] - 1| on indices 0..N-2 (and edges)
    corner: float               # entry (N-1, N-1)
    corner_expected: float      # 1 - N, forced by a vanishing trace
    trace: float
    product_defect: float       # exact: A_q A_qbar = diag(m+1) off the corner, A_qbar A_q = diag(m)
    float_defect: float         # same identities evaluated in quaternion floating point

    @property
    def passed(self) -> bool:
        return (self.safe_defect == 0.0 and self.corner == self.corner_expected
                and self.product_defect == 0.0)


def commutator_check(n_trunc: int) -> CommutatorReport:
    """``[A_q, A_qbar]`` on the truncated space.

    The ladder entries are square roots, so the exact route uses sympy; the
    quaternion floating-point route is reported alongside.
    """
    if n_trunc < 2:
        raise ValueError("n_trunc must be >= 2")
    import sympy
    s = n_trunc - 1
    A, Ad = exact_ladders(n_trunc)
    up, down = A * Ad, Ad * A
    C = up - down
    target = sympy.eye(n_trunc)
    target[s, s] = 1 - n_trunc
    safe = max(abs(float(x)) for x in (C - target))
    up_target = sympy.diag(*([k + 1 for k in range(s)] + [0]))
    down_target = sympy.diag(*range(n_trunc))
    prod = max(max(abs(float(x)) for x in (up - up_target)),
               max(abs(float(x)) for x in (down - down_target)))

    Aq, Aqb = analytic_Aq(n_trunc), analytic_Aqbar(n_trunc)
    Cf = commutator(Aq, Aqb).data
    target_f = np.zeros_like(Cf)
    target_f[..., 0] = np.array(target.tolist(), dtype=float)
    return CommutatorReport(
        n_trunc=n_trunc,
        safe_defect=float(safe),
        corner=float(C[s, s]),
        corner_expected=float(1 - n_trunc),
        trace=float(C.trace()),
        product_defect=float(prod),
        float_defect=float(np.abs(Cf - target_f).max()),
    )


def adjoint_pair_defect(f: Symbol, grid: QuadratureGrid | None, n_trunc: int) -> float:
    """``max |adjoint(A_f) - A_conj(f)|``."""
    A = quantize(f, grid, n_trunc).operator
    B = quantize(f.conjugate(), grid, n_trunc).operator
    return operator_distance(adjoint(A), B)


def quantize_uncertified(f: Symbol, grid: QuadratureGrid, n_trunc: int) -> QuantizationResult:
    """`quantize` with the exactness warning silenced (callers report certification)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return quantize(f, grid, n_trunc)
