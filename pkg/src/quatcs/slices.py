"""
Quantum mechanics on a quaternion slice ``L_I = R + I R``.

Slice scalars ``x + y I`` are stored as complex numbers ``x + y i`` with the
unit ``I`` carried once per operator. Inside a slice scalars commute, so a
left scalar multiple of an operator is again a matrix and the momentum
``P_I = (-I/sqrt 2)(A - A^dagger)`` is an honest self-adjoint operator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_laguerre

from .linalg import RQOperator, commutator, operator_distance
from .quantize import canonical_ket_coefficients, sandwich_integral
from .quaternion import DEFAULT_TOL, Quaternion, is_imaginary_unit, slice_embed

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class SliceOperator:
    unit: Quaternion
    data: np.ndarray   # complex (N, N); entry x + iy stands for x + yI

    def __post_init__(self):
        a = np.array(self.data, dtype=complex)
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def _same_slice(self, other: "SliceOperator"):
        if not self.unit.isclose(other.unit):
            raise ValueError("operators live on different slices")

    def __add__(self, other):
        self._same_slice(other)
        return SliceOperator(self.unit, self.data + other.data)

    def __sub__(self, other):
        self._same_slice(other)
        return SliceOperator(self.unit, self.data - other.data)

    def __matmul__(self, other):
        self._same_slice(other)
        return SliceOperator(self.unit, self.data @ other.data)

    def scale(self, z: complex) -> "SliceOperator":
        """Left multiple by the slice scalar ``Re z + Im z I``."""
        return SliceOperator(self.unit, z * self.data)

    def adjoint(self) -> "SliceOperator":
        return SliceOperator(self.unit, self.data.conj().T)

    def to_quaternion(self) -> RQOperator:
        return RQOperator(slice_embed(self.data, self.unit))


def _check_unit(unit: Quaternion):
    if not is_imaginary_unit(unit):
        raise ValueError(f"{unit!r} is not a unit pure quaternion")


def slice_operators(unit: Quaternion, n_trunc: int):
    """``(Q_I, P_I, N_I)`` on the truncated slice Fock space."""
    _check_unit(unit)
    if n_trunc < 2:
        raise ValueError("n_trunc must be >= 2")
    A = np.diag(np.sqrt(np.arange(1, n_trunc, dtype=float)), 1).astype(complex)
    Ad = A.conj().T
    Q = SliceOperator(unit, (A + Ad) / SQRT2)
    P = SliceOperator(unit, (-1j / SQRT2) * (A - Ad))
    N = SliceOperator(unit, Ad @ A)
    return Q, P, N


@dataclass(frozen=True)
class CanonicalReport:
    unit: Quaternion
    commutator_defect: float       # |[Q,P] - I| on 0..N-2, slice coordinates
    hamiltonian_defect: float      # |(Q^2+P^2)/2 - (N + 1/2)| on 0..N-2
    embedded_defect: float         # commutator recomputed with quaternion matrices
    self_adjoint_defect: float     # max over Q, P
    spectrum: np.ndarray           # diagonal of the Hamiltonian on 0..N-2

    def passed(self, tol: float = 1e-13) -> bool:
        return max(self.commutator_defect, self.hamiltonian_defect,
                   self.embedded_defect, self.self_adjoint_defect) <= tol


def canonical_commutation_check(unit: Quaternion, n_trunc: int) -> CanonicalReport:
    if n_trunc < 3:
        raise ValueError("n_trunc must be >= 3")
    Q, P, N = slice_operators(unit, n_trunc)
    s = n_trunc - 1
    C = (Q @ P - P @ Q).data
    comm = np.abs(C[:s, :s] - 1j * np.eye(s)).max()
    H = 0.5 * ((Q @ Q).data + (P @ P).data)
    ham = np.abs(H[:s, :s] - (N.data[:s, :s] + 0.5 * np.eye(s))).max()

    Cq = commutator(Q.to_quaternion(), P.to_quaternion())
    target = SliceOperator(unit, 1j * np.eye(n_trunc)).to_quaternion()
    emb = np.sqrt(np.sum((Cq.data - target.data)[:s, :s] ** 2, axis=-1)).max()

    sa = max(np.abs(Q.data - Q.adjoint().data).max(), np.abs(P.data - P.adjoint().data).max())
    return CanonicalReport(unit, float(comm), float(ham), float(emb), float(sa),
                           np.real(np.diag(H))[:s].copy())


def classical_slice_hamiltonian(q: Quaternion, unit: Quaternion) -> Quaternion:
    """``(qq_I**2 + pp_I**2)/2`` with ``qq_I = (q+conj q)/sqrt 2``, ``pp_I = -I (q-conj q)/sqrt 2``."""
    qq = (q + q.conjugate()) * (1 / SQRT2)
    pp = unit * (-1 / SQRT2) * (q - q.conjugate())
    return (qq * qq + pp * pp) * 0.5


def slice_resolution_check(unit: Quaternion, n_trunc: int, radial_order: int | None = None,
                           theta_nodes: int | None = None) -> float:
    """Max deviation of ``int N(q) |gamma_q><gamma_q| dmu_I`` from the identity.

    ``dmu_I = (1/pi) r exp(-r**2) dr dtheta`` over ``q = r exp(I theta)``,
    evaluated in quaternion arithmetic on the slice.
    """
    _check_unit(unit)
    K = radial_order or math.ceil(n_trunc / 2) + 1
    M = theta_nodes or 2 * n_trunc + 1
    if 2 * K - 1 < n_trunc - 1 or M < 2 * n_trunc - 1:
        raise ValueError("quadrature orders do not cover the truncation")
    t, wt = roots_laguerre(K)
    theta = 2 * np.pi * np.arange(M) / M
    z = (np.sqrt(t)[:, None] * np.exp(1j * theta)[None, :]).reshape(-1)
    w = (wt[:, None] * np.full(M, 1.0 / M)[None, :]).reshape(-1)
    q = slice_embed(z, unit)
    B = canonical_ket_coefficients(q, n_trunc)
    ones = np.zeros((len(w), 4))
    ones[:, 0] = 1.0
    A = RQOperator(sandwich_integral(B, ones, w))
    return operator_distance(A, RQOperator.identity(n_trunc))


def slice_commutes(p: Quaternion, q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return (p * q).isclose(q * p, tol)
