"""
Quaternionic Hermite polynomials and the coherent-state quantizations built
on them.

One-index family ``H_n(q)``: the complex Hermite polynomials with ``z``
replaced by ``q``. They are orthogonal for
``dnu_s = exp(-(1-s)x**2 - (1/s-1)y**2) dx dy`` (``q = x + yI``) times the
Haar average over the unit ``I``.

Two-index family ``H_{n,m}(q, conj q)``: the quaternionic version of
``(-1)**(n+m) exp(|z|**2) d^n/dz^n d^m/dconj(z)^m exp(-|z|**2)``. Since ``q``
and ``conj q`` commute, it obeys

    H_{n,m+1} = q H_{n,m} - n H_{n-1,m}
    H_{n+1,m} = conj(q) H_{n,m} - m H_{n,m-1}

(from ``d/dconj(z) H_{n,m} = n H_{n-1,m}`` and its mirror), with
``H_{0,0} = 1``. In particular ``H_{0,m} = q**m`` and ``H_{n,0} = conj(q)**n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_hermite, roots_legendre

from .linalg import RQOperator, adjoint, commutator, operator_distance
from .quadrature import build_grid
from .quantize import sandwich_integral
from .quaternion import Quaternion, as_qarray, qabs2, qconj, qmul, qreal, unit_direction

S_MIN, S_MAX = 0.01, 0.99


def _qin(q):
    """Accept a `Quaternion` or an array; remember which for the return value."""
    if isinstance(q, Quaternion):
        return q.to_array(), True
    return as_qarray(q), False


def _qout(a, scalar):
    return Quaternion.from_array(a) if scalar else a


# ---------------------------------------------------------------------------
# one index

def hermite_n(n: int, q):
    """``H_n(q) = n! sum_k (-1)**k (2q)**(n-2k) / (k! (n-2k)!)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    qa, scalar = _qin(q)
    two_q = 2.0 * qa
    powers = [qreal(np.ones(qa.shape[:-1]))]
    for _ in range(n):
        powers.append(qmul(powers[-1], two_q))
    out = np.zeros(qa.shape)
    for k in range(n // 2 + 1):
        c = (-1) ** k * math.factorial(n) / (math.factorial(k) * math.factorial(n - 2 * k))
        out = out + c * powers[n - 2 * k]
    return _qout(out, scalar)


def hermite_n_recurrence(n: int, q):
    """``H_{n+1} = 2q H_n - 2n H_{n-1}``."""
    qa, scalar = _qin(q)
    prev = qreal(np.ones(qa.shape[:-1]))
    if n == 0:
        return _qout(prev, scalar)
    cur = 2.0 * qa
    for k in range(1, n):
        prev, cur = cur, 2.0 * qmul(qa, cur) - 2.0 * k * prev
    return _qout(cur, scalar)


def b_n(n: int, s: float) -> float:
    """Squared norm of ``H_n`` under ``dnu_s``."""
    return (math.pi * math.sqrt(s) / (1 - s)) * (2 * (1 + s) / (1 - s)) ** n * math.factorial(n)


def b_n_exact(n: int, s):
    """`b_n` as a sympy expression (``s`` should be a sympy rational)."""
    import sympy
    s = sympy.nsimplify(s)
    return sympy.pi * sympy.sqrt(s) / (1 - s) * (2 * (1 + s) / (1 - s)) ** n * sympy.factorial(n)


@dataclass(frozen=True)
class HermiteFamilyS:
    s: float

    def __post_init__(self):
        if not (S_MIN <= self.s <= S_MAX):
            raise ValueError(f"s must lie in [{S_MIN}, {S_MAX}], got {self.s}")

    def b(self, n: int) -> float:
        return b_n(n, self.s)

    @property
    def ratio_base(self) -> float:
        """``b_{n+1} / b_n = ratio_base * (n + 1)``."""
        return 2 * (1 + self.s) / (1 - self.s)

    def normalized(self, q, n_terms: int) -> np.ndarray:
        """``h_{m,s}(q) = H_m(q) / sqrt(b_m)`` for ``m < n_terms``, stacked on axis -2.

        Computed with the normalised three-term recurrence, which stays finite
        far beyond where ``H_m`` and ``b_m`` separately overflow.
        """
        qa = as_qarray(q)
        c = self.ratio_base
        out = np.empty(qa.shape[:-1] + (n_terms, 4))
        out[..., 0, :] = qreal(np.full(qa.shape[:-1], 1 / math.sqrt(self.b(0))))
        if n_terms > 1:
            out[..., 1, :] = 2.0 * qa / math.sqrt(self.b(0) * c)
        for k in range(1, n_terms - 1):
            out[..., k + 1, :] = (2.0 * qmul(qa, out[..., k, :]) / math.sqrt(c)
                                  - 2.0 * math.sqrt(k) * out[..., k - 1, :] / c) / math.sqrt(k + 1)
        return out

    def kernel(self, x, y):
        """Closed form of ``sum_n |h_{n,s}|**2`` at ``z = x + iy``.

        ``(1 - s**2)/(2 pi s) exp((1-s) x**2 + (1/s - 1) y**2)``; times the
        ``dnu_s`` density this is the constant ``(1 - s**2)/(2 pi s)``.
        """
        s = self.s
        return (1 - s * s) / (2 * math.pi * s) * np.exp((1 - s) * np.asarray(x) ** 2
                                                         + (1 / s - 1) * np.asarray(y) ** 2)

    def kernel_series(self, q, n_terms: int = 200) -> np.ndarray:
        """``sum_{m < n_terms} h_m(q) conj(h_m(q))`` as quaternions."""
        h = self.normalized(q, n_terms)
        return np.sum(qmul(h, qconj(h)), axis=-2)


@dataclass(frozen=True, eq=False)
class HermiteGrid:
    """Scaled Gauss-Hermite in ``x, y`` times a (u, psi) rule for the unit ``I``."""

    q: np.ndarray
    w: np.ndarray
    exact_degree: int   # total polynomial degree in (x, y) integrated exactly

    def nodes(self):
        return self.q, self.w


def hermite_grid(s: float, degree: int, phi_order: int = 2, psi_nodes: int = 5) -> HermiteGrid:
    """Nodes and weights for ``dnu_s(x, y) domega``, exact for polynomials of ``degree`` in x, y."""
    K = degree // 2 + 1
    xi, wi = roots_hermite(K)
    ax, ay = 1 - s, 1 / s - 1
    x = xi / math.sqrt(ax)
    y = xi / math.sqrt(ay)
    wx = wi / math.sqrt(ax)
    wy = wi / math.sqrt(ay)
    u, wu = roots_legendre(phi_order)
    psi = 2 * np.pi * np.arange(psi_nodes) / psi_nodes
    X, Y, U, PS = np.meshgrid(x, y, u, psi, indexing="ij")
    W = (wx[:, None, None, None] * wy[None, :, None, None]
         * (wu / 2)[None, None, :, None] / psi_nodes)
    unit = unit_direction(np.arccos(U), PS)
    q = qreal(X) + Y[..., None] * unit
    return HermiteGrid(q.reshape(-1, 4), np.broadcast_to(W, X.shape).reshape(-1).copy(), 2 * K - 1)


def hermite_orthogonality_s(s: float, n_max: int, grid: HermiteGrid | None = None) -> np.ndarray:
    """Quaternion Gram matrix ``<h_{m,s}|h_{n,s}>`` for ``m, n <= n_max``, shape ``(n+1, n+1, 4)``."""
    fam = HermiteFamilyS(s)
    if grid is None:
        grid = hermite_grid(s, 2 * n_max)
    q, w = grid.nodes()
    h = fam.normalized(q, n_max + 1)
    ones = qreal(np.ones(len(w)))
    return sandwich_integral(qconj(h), ones, w)


# ---------------------------------------------------------------------------
# two indices

def hermite_nm_table(n_max: int, m_max: int, q) -> np.ndarray:
    """All ``H_{n,m}(q, conj q)`` for ``n <= n_max``, ``m <= m_max``: shape ``(..., n_max+1, m_max+1, 4)``."""
    qa = as_qarray(q)
    qb = qconj(qa)
    T = np.zeros(qa.shape[:-1] + (n_max + 1, m_max + 1, 4))
    T[..., 0, 0, 0] = 1.0
    for m in range(m_max):
        T[..., 0, m + 1, :] = qmul(qa, T[..., 0, m, :])
    for n in range(n_max):
        for m in range(m_max + 1):
            nxt = qmul(qb, T[..., n, m, :])
            if m:
                nxt = nxt - m * T[..., n, m - 1, :]
            T[..., n + 1, m, :] = nxt
    return T


def rodrigues_nm(n: int, m: int, q: Quaternion) -> Quaternion:
    """Independent reference for ``H_{n,m}``: differentiate the Gaussian symbolically.

    ``z`` and ``conj z`` are treated as independent symbols; the resulting
    polynomial is then evaluated at the commuting pair ``(q, conj q)``.
    """
    import sympy
    z, zb = sympy.symbols("z zb")
    g = sympy.exp(-z * zb)
    expr = sympy.expand(sympy.simplify((-1) ** (n + m) * sympy.diff(g, z, n, zb, m) / g))
    poly = sympy.Poly(expr, z, zb)
    qb = q.conjugate()
    total = Quaternion(0.0, 0.0, 0.0, 0.0)
    for (a, b), c in poly.terms():
        total = total + q ** a * qb ** b * float(c)
    return total


def hermite_nm(n: int, m: int, q):
    if n < 0 or m < 0:
        raise ValueError("indices must be >= 0")
    qa, scalar = _qin(q)
    return _qout(hermite_nm_table(n, m, qa)[..., n, m, :], scalar)


@dataclass(frozen=True)
class HermiteFamilyTwo:
    """Coherent states ``sum_m phi_m conj(h_{n,m}(q))`` for a fixed first index ``n``."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")

    def normalized(self, q, n_terms: int) -> np.ndarray:
        """``h_{n,m} = H_{n,m} / sqrt(n! m!)`` for ``m < n_terms``."""
        T = hermite_nm_table(self.n, n_terms - 1, q)[..., self.n, :, :]
        norms = np.sqrt([float(math.factorial(self.n) * math.factorial(m)) for m in range(n_terms)])
        return T / norms[:, None]

    def kernel(self, q) -> np.ndarray:
        return np.exp(qabs2(q))

    def kernel_series(self, q, n_terms: int = 60) -> np.ndarray:
        h = self.normalized(q, n_terms)
        return np.sum(qmul(h, qconj(h)), axis=-2)


# ---------------------------------------------------------------------------
# quantization with either family

@dataclass(frozen=True, eq=False)
class HermiteQuantization:
    family: object
    n_trunc: int
    A1: RQOperator
    Aq: RQOperator
    Aqbar: RQOperator
    commutator: RQOperator
    identity_defect: float
    adjoint_defect: float       # |A_qbar - A_q^dagger|
    band_defect: float          # largest entry of A_q off the expected bands
    normalization_defect: float # kernel series vs closed form at probe points (relative)


def _family_grid(family, n_trunc: int):
    if isinstance(family, HermiteFamilyS):
        return hermite_grid(family.s, 2 * n_trunc - 1)
    if isinstance(family, HermiteFamilyTwo):
        return build_grid(n_trunc + family.n, 1)
    raise TypeError(f"unknown Hermite family {family!r}")


def _expected_bands(family, n_trunc: int) -> np.ndarray:
    i = np.arange(n_trunc)
    diff = i[None, :] - i[:, None]   # l - m
    if isinstance(family, HermiteFamilyS):
        return np.abs(diff) == 1
    return diff == -1                # q h_{n,l} only reaches h_{n,l+1}


def _probe_points() -> np.ndarray:
    rng = np.random.default_rng(12345)
    pts = rng.normal(size=(6, 4))
    return pts / np.linalg.norm(pts, axis=-1, keepdims=True) * rng.uniform(0.2, 1.5, size=(6, 1))


def hermite_cs_and_quantize(family, grid=None, n_trunc: int = 8) -> HermiteQuantization:
    """Quantize ``1``, ``q`` and ``conj q`` with the family's coherent states.

    ``(A_f)_{ml} = int conj(h_m(q)) f(q) h_l(q) dmeasure`` where ``dmeasure``
    is the family's orthogonality measure (the kernel cancels the coherent
    state normalisation).
    """
    if grid is None:
        grid = _family_grid(family, n_trunc)
    q, w = grid.nodes()
    B = qconj(family.normalized(q, n_trunc))
    ones = qreal(np.ones(len(w)))
    A1 = RQOperator(sandwich_integral(B, ones, w))
    Aq = RQOperator(sandwich_integral(B, q, w))
    Aqb = RQOperator(sandwich_integral(B, qconj(q), w))

    band = _expected_bands(family, n_trunc)
    off = np.sqrt(np.sum(Aq.data ** 2, axis=-1))[~band]

    pts = _probe_points()
    if isinstance(family, HermiteFamilyS):
        series = family.kernel_series(pts, 200)
        z_im = np.sqrt(np.sum(pts[:, 1:] ** 2, axis=-1))
        closed = family.kernel(pts[:, 0], z_im)
    else:
        series = family.kernel_series(pts, 80)
        closed = family.kernel(pts)
    norm_defect = float(np.max(np.abs(series[:, 0] - closed) / closed
                               + np.abs(series[:, 1:]).max(axis=-1) / closed))

    return HermiteQuantization(
        family=family,
        n_trunc=n_trunc,
        A1=A1,
        Aq=Aq,
        Aqbar=Aqb,
        commutator=commutator(Aq, Aqb),
        identity_defect=operator_distance(A1, RQOperator.identity(n_trunc)),
        adjoint_defect=operator_distance(Aqb, adjoint(Aq)),
        band_defect=float(off.max()) if off.size else 0.0,
        normalization_defect=norm_defect,
    )
