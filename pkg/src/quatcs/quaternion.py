"""
Quaternion arithmetic in component and 2x2 complex-matrix form.

Two layers live here:

- `Quaternion`, an immutable scalar value with operator overloading. Its
  components may be any ring elements supporting ``+``, ``-`` and ``*``
  (floats by default, sympy expressions for exact checks).
- Vectorised helpers (`qmul`, `qconj`, `qabs2`, ...) acting on float arrays
  whose last axis holds the four components ``(x0, x1, x2, x3)``. Vectors and
  operators elsewhere in the package are stored in this layout.

The imaginary units are identified with ``i = sqrt(-1) s1``,
``j = -sqrt(-1) s2``, ``k = sqrt(-1) s3`` (note the sign on the second Pauli
matrix), so that

    q = [[x0 + i x3, -x2 + i x1],
         [x2 + i x1,  x0 - i x3]].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

DEFAULT_TOL = 1e-12


class StructureError(ValueError):
    """A 2x2 complex matrix does not have the quaternion pattern."""


# MULT_TABLE[a, b, c]: coefficient of unit c in (unit a) * (unit b)
MULT_TABLE = np.zeros((4, 4, 4))
for _a, _b, _c, _s in [
    (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1),
    (1, 0, 1, 1), (1, 1, 0, -1), (1, 2, 3, 1), (1, 3, 2, -1),
    (2, 0, 2, 1), (2, 1, 3, -1), (2, 2, 0, -1), (2, 3, 1, 1),
    (3, 0, 3, 1), (3, 1, 2, 1), (3, 2, 1, -1), (3, 3, 0, -1),
]:
    MULT_TABLE[_a, _b, _c] = _s
del _a, _b, _c, _s

_CONJ_SIGN = np.array([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class Quaternion:
    x0: Any = 0.0
    x1: Any = 0.0
    x2: Any = 0.0
    x3: Any = 0.0

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        a = np.asarray(a, dtype=float)
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    @classmethod
    def real(cls, x) -> "Quaternion":
        return cls(x, 0 * x, 0 * x, 0 * x)

    def to_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2, self.x3], dtype=float)

    @property
    def components(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def vector(self) -> tuple:
        return (self.x1, self.x2, self.x3)

    def __iter__(self):
        return iter(self.components)

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return multiply(self, o)

    def __rmul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return multiply(o, self)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * other.inverse()
        return Quaternion(self.x0 / other, self.x1 / other, self.x2 / other, self.x3 / other)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Quaternion.real(1 + 0 * self.x0)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm2(self):
        return self.x0 ** 2 + self.x1 ** 2 + self.x2 ** 2 + self.x3 ** 2

    def __abs__(self) -> float:
        return math.sqrt(float(self.norm2()))

    def inverse(self) -> "Quaternion":
        return self.conjugate() / self.norm2()

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(c) <= tol for c in self.vector)

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return abs(self - _coerce(other)) <= tol

    def __repr__(self) -> str:
        return f"Quaternion({self.x0!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"


def _coerce(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, np.integer)):
        return Quaternion(int(x), 0, 0, 0)
    if isinstance(x, (float, np.floating)):
        return Quaternion.real(float(x))
    try:  # sympy scalars and similar
        import sympy
        if isinstance(x, sympy.Basic):
            return Quaternion(x, 0, 0, 0)
    except ImportError:  # pragma: no cover
        pass
    return None


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I_UNIT = Quaternion(0.0, 1.0, 0.0, 0.0)
J_UNIT = Quaternion(0.0, 0.0, 1.0, 0.0)
K_UNIT = Quaternion(0.0, 0.0, 0.0, 1.0)


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product ``p q``."""
    a0, a1, a2, a3 = p.components
    b0, b1, b2, b3 = q.components
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conjugate(q: Quaternion) -> Quaternion:
    return q.conjugate()


# ---------------------------------------------------------------------------
# vectorised component arithmetic, last axis = (x0, x1, x2, x3)

def as_qarray(x) -> np.ndarray:
    if isinstance(x, Quaternion):
        return x.to_array()
    a = np.asarray(x, dtype=float)
    if a.shape[-1:] != (4,):
        raise ValueError(f"expected trailing axis of length 4, got shape {a.shape}")
    return a


def qmul(a, b) -> np.ndarray:
    """Broadcasting Hamilton product of quaternion arrays."""
    a = as_qarray(a)
    b = as_qarray(b)
    a0, a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)


def qconj(a) -> np.ndarray:
    return as_qarray(a) * _CONJ_SIGN


def qabs2(a) -> np.ndarray:
    a = as_qarray(a)
    return np.sum(a * a, axis=-1)


def qabs(a) -> np.ndarray:
    return np.sqrt(qabs2(a))


def qpowers(q, n: int) -> np.ndarray:
    """Stack ``q**0, ..., q**(n-1)`` along a new axis just before the component axis."""
    q = as_qarray(q)
    out = np.empty(q.shape[:-1] + (n, 4))
    out[..., 0, :] = [1.0, 0.0, 0.0, 0.0]
    for m in range(1, n):
        out[..., m, :] = qmul(out[..., m - 1, :], q)
    return out


def qreal(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape + (4,))
    out[..., 0] = x
    return out


# ---------------------------------------------------------------------------
# 2x2 complex matrix representation

def to_matrix(q) -> np.ndarray:
    """Complex 2x2 matrix of ``q`` (works on arrays of shape (..., 4))."""
    x = as_qarray(q)
    x0, x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2], x[..., 3]
    m = np.empty(x.shape[:-1] + (2, 2), dtype=complex)
    m[..., 0, 0] = x0 + 1j * x3
    m[..., 0, 1] = -x2 + 1j * x1
    m[..., 1, 0] = x2 + 1j * x1
    m[..., 1, 1] = x0 - 1j * x3
    return m


def from_matrix(m, tol: float = DEFAULT_TOL) -> Quaternion:
    """Inverse of `to_matrix`; raises `StructureError` off the quaternion pattern."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise StructureError(f"expected a 2x2 matrix, got shape {m.shape}")
    # pattern: m11 = conj(m00), m10 = -conj(m01)
    defect = max(abs(m[1, 1] - np.conj(m[0, 0])), abs(m[1, 0] + np.conj(m[0, 1])))
    if defect > tol * max(1.0, np.abs(m).max()):
        raise StructureError(f"matrix is not of quaternion form (defect {defect:.3g})")
    x0 = 0.5 * (m[0, 0].real + m[1, 1].real)
    x3 = 0.5 * (m[0, 0].imag - m[1, 1].imag)
    x1 = 0.5 * (m[0, 1].imag + m[1, 0].imag)
    x2 = 0.5 * (m[1, 0].real - m[0, 1].real)
    return Quaternion(float(x0), float(x1), float(x2), float(x3))


def array_from_matrix(m) -> np.ndarray:
    """Vectorised `from_matrix` without the pattern check."""
    m = np.asarray(m, dtype=complex)
    out = np.empty(m.shape[:-2] + (4,))
    out[..., 0] = 0.5 * (m[..., 0, 0].real + m[..., 1, 1].real)
    out[..., 3] = 0.5 * (m[..., 0, 0].imag - m[..., 1, 1].imag)
    out[..., 1] = 0.5 * (m[..., 0, 1].imag + m[..., 1, 0].imag)
    out[..., 2] = 0.5 * (m[..., 1, 0].real - m[..., 0, 1].real)
    return out


# ---------------------------------------------------------------------------
# polar form q = r (cos(theta) + sin(theta) I(phi, psi))

@dataclass(frozen=True)
class PolarForm:
    r: float
    theta: float
    phi: float
    psi: float


def unit_direction(phi, psi) -> np.ndarray:
    """Pure unit quaternion ``sin(phi)cos(psi) i + sin(phi)sin(psi) j + cos(phi) k``."""
    phi = np.asarray(phi, dtype=float)
    psi = np.asarray(psi, dtype=float)
    phi, psi = np.broadcast_arrays(phi, psi)
    out = np.zeros(phi.shape + (4,))
    out[..., 1] = np.sin(phi) * np.cos(psi)
    out[..., 2] = np.sin(phi) * np.sin(psi)
    out[..., 3] = np.cos(phi)
    return out


def sigma_n(phi: float, psi: float) -> np.ndarray:
    """Hermitian involution ``sigma(n)`` of the polar decomposition."""
    return np.array([
        [np.cos(phi), np.sin(phi) * np.exp(1j * psi)],
        [np.sin(phi) * np.exp(-1j * psi), -np.cos(phi)],
    ])


def to_polar(q: Quaternion) -> PolarForm:
    """Polar coordinates with theta chosen in ``[0, pi]``.

    Degenerate strata are canonicalised: ``r = 0`` gives all angles zero,
    ``sin(theta) = 0`` gives ``phi = psi = 0`` and ``sin(phi) = 0`` gives
    ``psi = 0``.
    """
    x0, x1, x2, x3 = (float(c) for c in q.components)
    v = math.sqrt(x1 * x1 + x2 * x2 + x3 * x3)
    r = math.hypot(x0, v)
    if r == 0.0:
        return PolarForm(0.0, 0.0, 0.0, 0.0)
    theta = math.atan2(v, x0)
    if v == 0.0:
        return PolarForm(r, theta, 0.0, 0.0)
    rho = math.hypot(x1, x2)
    phi = math.atan2(rho, x3)
    if rho == 0.0:
        return PolarForm(r, theta, phi, 0.0)
    psi = math.atan2(x2, x1) % (2 * math.pi)
    return PolarForm(r, theta, phi, psi)


def from_polar(p: PolarForm) -> Quaternion:
    d = unit_direction(p.phi, p.psi)
    s = p.r * math.sin(p.theta)
    return Quaternion(p.r * math.cos(p.theta), s * d[1], s * d[2], s * d[3])


def polar_matrix(p: PolarForm) -> np.ndarray:
    """``A(r) exp(i theta sigma(n))`` via ``cos(theta) + i sin(theta) sigma(n)``."""
    return p.r * (np.cos(p.theta) * np.eye(2) + 1j * np.sin(p.theta) * sigma_n(p.phi, p.psi))


# ---------------------------------------------------------------------------
# slices

@dataclass(frozen=True)
class SlicePoint:
    x: float
    y: float
    unit: Quaternion
    degenerate: bool = False

    def embed(self) -> Quaternion:
        return Quaternion.real(self.x) + self.unit * self.y

    def as_complex(self) -> complex:
        return complex(self.x, self.y)


def is_imaginary_unit(u: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return abs(float(u.x0)) <= tol and abs(abs(u) - 1.0) <= tol


def slice_decompose(q: Quaternion) -> SlicePoint:
    """Write ``q = x + y I`` with ``y >= 0`` and ``I`` a unit pure quaternion.

    For real ``q`` the unit is undetermined; ``I = i`` is returned with
    ``degenerate=True``.
    """
    x1, x2, x3 = (float(c) for c in q.vector)
    y = math.sqrt(x1 * x1 + x2 * x2 + x3 * x3)
    if y == 0.0:
        return SlicePoint(float(q.x0), 0.0, I_UNIT, degenerate=True)
    return SlicePoint(float(q.x0), y, Quaternion(0.0, x1 / y, x2 / y, x3 / y))


def slice_embed(z, unit) -> np.ndarray:
    """Map complex numbers ``x + iy`` to quaternions ``x + y I`` (array form)."""
    z = np.asarray(z, dtype=complex)
    u = as_qarray(unit)
    return qreal(z.real) + z.imag[..., None] * u


# ---------------------------------------------------------------------------
# two-argument exponential series

def exp_pair_terms(pq_norm: float, tol: float) -> int:
    """Smallest M with the majorant tail ``sum_{m>M} x**m / m!`` below ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    x = float(pq_norm)
    term = 1.0  # x**M / M!
    M = 0
    while True:
        nxt = term * x / (M + 1)
        # geometric bound on the tail once the ratio x/(M+2) < 1
        ratio = x / (M + 2)
        if ratio < 1.0 and nxt / (1.0 - ratio) < tol:
            return M
        term = nxt
        M += 1


def exp_pair(p: Quaternion, q: Quaternion, tol: float = 1e-16) -> Quaternion:
    """``E(p, q) = sum_m p**m q**m / m!``, truncated once the majorant tail is below ``tol``."""
    M = exp_pair_terms(abs(p) * abs(q), tol)
    pa, qa = p.to_array(), q.to_array()
    pm = np.array([1.0, 0.0, 0.0, 0.0])
    qm = pm.copy()
    total = pm.copy()
    fact = 1.0
    for m in range(1, M + 1):
        pm = qmul(pm, pa)
        qm = qmul(qm, qa)
        fact *= m
        total = total + qmul(pm, qm) / fact
    return Quaternion.from_array(total)


def exp_pair_array(p, q, order: int) -> np.ndarray:
    """``sum_{m <= order} p**m q**m / m!`` for broadcastable quaternion arrays."""
    p = as_qarray(p)
    q = as_qarray(q)
    shape = np.broadcast_shapes(p.shape, q.shape)
    pm = np.broadcast_to(np.array([1.0, 0.0, 0.0, 0.0]), shape).copy()
    qm = pm.copy()
    total = pm.copy()
    fact = 1.0
    for m in range(1, order + 1):
        pm = qmul(pm, p)
        qm = qmul(qm, q)
        fact *= m
        total += qmul(pm, qm) / fact
    return total
