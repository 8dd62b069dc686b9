"""
Finite-dimensional right quaternionic Hilbert space.

Vectors are columns of quaternions with scalars acting from the right and
inner product ``<u|v> = sum conj(u_m) v_m`` (conjugate-linear in the left
slot). Operators are quaternion matrices acting from the left, which makes
them right-linear: ``A(f q) = (A f) q``.

A quaternion multiple of an operator is *not* a quaternion matrix. The
convention ``(a O) f = (O f) conj(a)`` breaks right-linearity for non-real
``a``, so such objects are kept as `ScaledOperator` and never flattened.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quaternion import (
    DEFAULT_TOL, MULT_TABLE, Quaternion, as_qarray, qabs, qconj, qmul, qreal,
    to_matrix, array_from_matrix,
)


class DimensionError(ValueError):
    pass


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def _check_dims(*dims):
    if len(set(dims)) != 1:
        raise DimensionError(f"dimension mismatch: {dims}")


@dataclass(frozen=True, eq=False)
class RQVector:
    """Quaternion column vector, components stored as an ``(N, 4)`` array."""

    data: np.ndarray

    def __post_init__(self):
        a = as_qarray(self.data)
        if a.ndim != 2:
            raise ValueError(f"RQVector needs shape (N, 4), got {a.shape}")
        object.__setattr__(self, "data", _frozen(a))

    @classmethod
    def basis(cls, dim: int, m: int, scalar=None) -> "RQVector":
        """``e_m`` or ``e_m * scalar``."""
        a = np.zeros((dim, 4))
        a[m] = [1.0, 0.0, 0.0, 0.0] if scalar is None else as_qarray(scalar)
        return cls(a)

    @classmethod
    def zeros(cls, dim: int) -> "RQVector":
        return cls(np.zeros((dim, 4)))

    @classmethod
    def from_quaternions(cls, qs) -> "RQVector":
        return cls(np.array([as_qarray(q) for q in qs]))

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, m) -> Quaternion:
        return Quaternion.from_array(self.data[m])

    def __add__(self, other: "RQVector") -> "RQVector":
        _check_dims(self.dim, other.dim)
        return RQVector(self.data + other.data)

    def __sub__(self, other: "RQVector") -> "RQVector":
        _check_dims(self.dim, other.dim)
        return RQVector(self.data - other.data)

    def __neg__(self) -> "RQVector":
        return RQVector(-self.data)

    def scale_right(self, q) -> "RQVector":
        """Right scalar action ``(f q)_m = f_m q``."""
        return RQVector(qmul(self.data, as_qarray(q)))

    def scale_left(self, q) -> "RQVector":
        """Basis-dependent left action ``(q f)_m = q f_m``."""
        return RQVector(qmul(as_qarray(q), self.data))

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.data ** 2)))

    def max_abs(self) -> float:
        return float(qabs(self.data).max()) if self.dim else 0.0


@dataclass(frozen=True, eq=False)
class RQOperator:
    """Quaternion matrix acting on the left, stored as an ``(N, N, 4)`` array."""

    data: np.ndarray

    def __post_init__(self):
        a = as_qarray(self.data)
        if a.ndim != 3 or a.shape[0] != a.shape[1]:
            raise ValueError(f"RQOperator needs shape (N, N, 4), got {a.shape}")
        object.__setattr__(self, "data", _frozen(a))

    @classmethod
    def identity(cls, dim: int) -> "RQOperator":
        return cls(qreal(np.eye(dim)))

    @classmethod
    def from_real(cls, m) -> "RQOperator":
        return cls(qreal(m))

    @classmethod
    def zeros(cls, dim: int) -> "RQOperator":
        return cls(np.zeros((dim, dim, 4)))

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, idx) -> Quaternion:
        return Quaternion.from_array(self.data[idx])

    def __add__(self, other: "RQOperator") -> "RQOperator":
        _check_dims(self.dim, other.dim)
        return RQOperator(self.data + other.data)

    def __sub__(self, other: "RQOperator") -> "RQOperator":
        _check_dims(self.dim, other.dim)
        return RQOperator(self.data - other.data)

    def __neg__(self) -> "RQOperator":
        return RQOperator(-self.data)

    def real_scale(self, x: float) -> "RQOperator":
        """Multiplication by a real scalar, the only scalar multiple that stays a matrix."""
        return RQOperator(self.data * float(x))

    def entrywise_left(self, q) -> "RQOperator":
        """Matrix with entries ``q A_ml``; not the same as ``ScaledOperator(q, A)``."""
        return RQOperator(qmul(as_qarray(q), self.data))

    def __matmul__(self, other):
        if isinstance(other, RQOperator):
            return matmul(self, other)
        if isinstance(other, RQVector):
            return apply(self, other)
        return NotImplemented

    def real_part(self) -> np.ndarray:
        return self.data[..., 0].copy()

    def entry_norms(self) -> np.ndarray:
        return qabs(self.data)


@dataclass(frozen=True, eq=False)
class ScaledOperator:
    """The composite ``alpha * base`` acting by ``f -> (base f) conj(alpha)``."""

    alpha: Quaternion
    base: RQOperator

    @property
    def dim(self) -> int:
        return self.base.dim


def inner(u: RQVector, v: RQVector) -> Quaternion:
    """``<u|v> = sum_m conj(u_m) v_m``."""
    _check_dims(u.dim, v.dim)
    return Quaternion.from_array(np.sum(qmul(qconj(u.data), v.data), axis=0))


def apply(A: RQOperator, f: RQVector) -> RQVector:
    _check_dims(A.dim, f.dim)
    return RQVector(np.einsum("mla,lb,abc->mc", A.data, f.data, MULT_TABLE))


def matmul(A: RQOperator, B: RQOperator) -> RQOperator:
    _check_dims(A.dim, B.dim)
    return RQOperator(np.einsum("ija,jkb,abc->ikc", A.data, B.data, MULT_TABLE))


def adjoint(A: RQOperator) -> RQOperator:
    """Entrywise ``(A^dagger)_ml = conj(A_lm)``."""
    return RQOperator(qconj(np.swapaxes(A.data, 0, 1)))


def commutator(A: RQOperator, B: RQOperator) -> RQOperator:
    return matmul(A, B) - matmul(B, A)


def scaled_apply(S: ScaledOperator, f: RQVector) -> RQVector:
    return apply(S.base, f).scale_right(S.alpha.conjugate())


def adjoint_defect(alpha: Quaternion, O: RQOperator, u: RQVector, v: RQVector):
    """Evaluate both sides of the naive rule ``(alpha O)^dagger = conj(alpha) O^dagger``.

    Returns ``(<u|(alpha O) v>, <(conj(alpha) O^dagger) u|v>)``. The pair agrees
    for real ``alpha`` and generally differs otherwise.
    """
    lhs = inner(u, scaled_apply(ScaledOperator(alpha, O), v))
    rhs = inner(scaled_apply(ScaledOperator(alpha.conjugate(), adjoint(O)), u), v)
    return lhs, rhs


def operator_distance(A: RQOperator, B: RQOperator) -> float:
    """Max entrywise quaternion-norm difference."""
    _check_dims(A.dim, B.dim)
    return float(qabs(A.data - B.data).max()) if A.dim else 0.0


def operators_close(A: RQOperator, B: RQOperator, tol: float = DEFAULT_TOL) -> bool:
    return operator_distance(A, B) <= tol


def is_self_adjoint(A: RQOperator, tol: float = DEFAULT_TOL) -> bool:
    return operators_close(A, adjoint(A), tol)


# complex embedding, used as an independent route for products

def complex_embedding(A: RQOperator) -> np.ndarray:
    """``2N x 2N`` complex matrix built from the 2x2 blocks of each entry."""
    blocks = to_matrix(A.data)  # (N, N, 2, 2)
    n = A.dim
    return blocks.transpose(0, 2, 1, 3).reshape(2 * n, 2 * n)


def from_complex_embedding(M: np.ndarray) -> RQOperator:
    n = M.shape[0] // 2
    blocks = M.reshape(n, 2, n, 2).transpose(0, 2, 1, 3)
    return RQOperator(array_from_matrix(blocks))
