"""Canonical right-quaternionic coherent states on a truncated Fock basis."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import gammainc

from .linalg import RQVector, ScaledOperator, apply, inner, scaled_apply
from .quantize import analytic_Aq, analytic_Aqbar
from .quaternion import Quaternion, exp_pair, qpowers


class TruncationWarning(UserWarning):
    """The truncated coherent state misses more norm than the requested tolerance."""


def truncation_tail(r2: float, n_trunc: int) -> float:
    """``exp(-r2) sum_{m >= N} r2**m / m!``: norm lost by keeping ``N`` Fock states."""
    if r2 == 0.0:
        return 0.0
    return float(gammainc(n_trunc, r2))


@dataclass(frozen=True, eq=False)
class CSVector:
    label: Quaternion
    n_trunc: int
    vector: RQVector
    tail_bound: float

    @property
    def data(self) -> np.ndarray:
        return self.vector.data


def cs_vector(q: Quaternion, n_trunc: int, tol: float = 1e-12) -> CSVector:
    """``|gamma_q> = exp(-|q|^2/2) sum_m e_m q**m / sqrt(m!)`` for ``m < n_trunc``."""
    if n_trunc < 1:
        raise ValueError("n_trunc must be >= 1")
    r2 = float(q.norm2())
    pw = qpowers(q.to_array(), n_trunc)
    scale = math.exp(-r2 / 2) / np.sqrt([float(math.factorial(m)) for m in range(n_trunc)])
    tail = truncation_tail(r2, n_trunc)
    if tail > tol:
        warnings.warn(f"coherent state at |q|^2={r2:.3g} truncated at N={n_trunc} "
                      f"loses norm {tail:.3g}", TruncationWarning, stacklevel=2)
    return CSVector(q, n_trunc, RQVector(pw * scale[:, None]), tail)


def overlap(p: Quaternion, q: Quaternion, tol: float = 1e-16) -> Quaternion:
    """``<gamma_q|gamma_p> = exp(-(|q|^2 + |p|^2)/2) E(conj(q), p)``."""
    e = exp_pair(q.conjugate(), p, tol)
    return e * math.exp(-(float(q.norm2()) + float(p.norm2())) / 2)


def cs_eigen_check(q: Quaternion, n_trunc: int) -> float:
    """``|| A_q gamma_q - gamma_q q ||`` over components ``0..N-2``.

    Component ``N-1`` is excluded: there the truncation drops the
    contribution of ``e_N``.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        g = cs_vector(q, n_trunc).vector
    d = (apply(analytic_Aq(n_trunc), g) - g.scale_right(q)).data[: n_trunc - 1]
    return float(np.sqrt(np.sum(d ** 2)))


def cs_eigen_defect_profile(q: Quaternion, n_trunc: int) -> np.ndarray:
    """Per-component norm of ``A_q gamma_q - gamma_q q`` (all ``N`` components)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        g = cs_vector(q, n_trunc).vector
    d = (apply(analytic_Aq(n_trunc), g) - g.scale_right(q)).data
    return np.sqrt(np.sum(d ** 2, axis=-1))


def cs_from_exponential(q: Quaternion, n_trunc: int) -> RQVector:
    """``exp(-|q|^2/2) sum_m (conj(q) A_qbar)**m e_0 / m!`` by repeated scaled action."""
    gen = ScaledOperator(q.conjugate(), analytic_Aqbar(n_trunc))
    term = RQVector.basis(n_trunc, 0)
    total = term
    for m in range(1, n_trunc):
        term = RQVector(scaled_apply(gen, term).data / m)
        total = total + term
    return RQVector(total.data * math.exp(-float(q.norm2()) / 2))


def exponential_terms(q: Quaternion, n_trunc: int) -> list:
    """The individual terms ``(conj(q) A_qbar)**m e_0 / m!`` (without the Gaussian prefactor)."""
    gen = ScaledOperator(q.conjugate(), analytic_Aqbar(n_trunc))
    terms = [RQVector.basis(n_trunc, 0)]
    for m in range(1, n_trunc):
        terms.append(RQVector(scaled_apply(gen, terms[-1]).data / m))
    return terms


def normalization(g: CSVector) -> float:
    return float(inner(g.vector, g.vector).x0)


def in_cs_domain(r: float, rho: Callable[[int], float], probe: int = 60) -> bool:
    """Finiteness test for ``sum_m r**(2m) / rho(m)`` with a general positive ``rho``.

    The squared convergence radius is the limit of ``rho(m+1) / rho(m)``. It is
    read off at ``m = probe`` and ``m = 2 probe``; a ratio that keeps growing
    (as for ``rho(m) = m!``) means the series converges for every ``r``.
    """
    near = rho(probe + 1) / rho(probe)
    far = rho(2 * probe + 1) / rho(2 * probe)
    if far > 1.5 * near:
        return True
    return r * r < far
