"""
Tensor quadrature for the measure ``exp(-r**2) dtau(r) dtheta dOmega(phi, psi)``.

The radial factor becomes ``exp(-t) dt / (2 pi)`` under ``t = r**2`` and is
integrated with Gauss-Laguerre. ``theta`` and ``psi`` use uniform rules,
``u = cos(phi)`` uses Gauss-Legendre with the ``1/(4 pi)`` of ``dOmega``
folded into the weights. Total mass of the combined weights is one.

Exactness for polynomial symbols of total degree ``d`` on an ``N``-dimensional
truncation:

- ``theta``: integrands carry frequencies up to ``2(N-1) + d``;
- radial: after the exact ``theta`` average only integer powers ``t**k`` with
  ``k <= N - 1 + d // 2`` survive;
- angular: after the ``theta`` average, dependence on the unit imaginary
  direction is polynomial of degree at most 2 in its components.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.special import roots_laguerre, roots_legendre

from .quaternion import qreal, unit_direction

ANGULAR_DEGREE_NEEDED = 2


class ExactnessError(ValueError):
    """Requested integral lies outside the grid's exactness certificate."""


class ExactnessWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Certificate:
    radial_degree: int   # Gauss-Laguerre exact for t**k, k <= radial_degree
    theta_degree: int    # uniform theta rule exact for |frequency| <= theta_degree
    angular_degree: int  # (u, psi) rule exact for polynomials of this degree on the sphere

    def covers(self, n_trunc: int, degree: int) -> bool:
        need = required_certificate(n_trunc, degree)
        return (self.radial_degree >= need.radial_degree
                and self.theta_degree >= need.theta_degree
                and self.angular_degree >= need.angular_degree)

    def as_dict(self) -> dict:
        return {"radial_degree": self.radial_degree, "theta_degree": self.theta_degree,
                "angular_degree": self.angular_degree}


def required_certificate(n_trunc: int, degree: int) -> Certificate:
    """Certificate sufficient for exact quantization of degree-``degree`` symbols."""
    return Certificate(radial_degree=n_trunc + degree,
                       theta_degree=2 * n_trunc + degree,
                       angular_degree=ANGULAR_DEGREE_NEEDED)


@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    t: np.ndarray          # Gauss-Laguerre nodes in t = r**2
    wt: np.ndarray         # weights for exp(-t) dt
    theta: np.ndarray
    u: np.ndarray          # cos(phi)
    wu: np.ndarray         # Legendre weights / 2 (sum to one)
    psi: np.ndarray
    certificate: Certificate
    _flat: dict = field(default_factory=dict, repr=False)

    @property
    def sizes(self) -> dict:
        return {"radial": len(self.t), "theta": len(self.theta),
                "phi": len(self.u), "psi": len(self.psi)}

    @property
    def n_nodes(self) -> int:
        return len(self.t) * len(self.theta) * len(self.u) * len(self.psi)

    def nodes(self):
        """Flat ``(q, w)``: quaternion nodes ``(n, 4)`` and weights ``(n,)`` in fixed order."""
        if not self._flat:
            r = np.sqrt(self.t)
            phi = np.arccos(self.u)
            R, TH, PH, PS = np.meshgrid(r, self.theta, phi, self.psi, indexing="ij")
            W = (self.wt[:, None, None, None] / len(self.theta)
                 * self.wu[None, None, :, None] / len(self.psi))
            direction = unit_direction(PH, PS)
            q = qreal(R * np.cos(TH)) + (R * np.sin(TH))[..., None] * direction
            self._flat["q"] = q.reshape(-1, 4)
            self._flat["w"] = np.broadcast_to(W, R.shape).reshape(-1).copy()
        return self._flat["q"], self._flat["w"]

    def radial_integral(self, g) -> float:
        """``int_0^inf g(r**2) 2 r exp(-r**2) dr`` on the radial rule."""
        return float(np.sum(self.wt * g(self.t)))


def build_grid(n_trunc: int, max_symbol_degree: int = 0, *, radial_order: int | None = None,
               theta_nodes: int | None = None, phi_order: int | None = None,
               psi_nodes: int | None = None) -> QuadratureGrid:
    """Smallest tensor grid certified for ``n_trunc`` and symbols up to ``max_symbol_degree``.

    Explicit orders override the derived ones; the certificate always reflects
    what the chosen grid actually integrates exactly.
    """
    if n_trunc < 1:
        raise ValueError("n_trunc must be >= 1")
    if max_symbol_degree < 0:
        raise ValueError("max_symbol_degree must be >= 0")
    need = required_certificate(n_trunc, max_symbol_degree)
    K = radial_order or math.ceil((need.radial_degree + 1) / 2)
    M_theta = theta_nodes or need.theta_degree + 1
    # one spare degree on the sphere
    P = phi_order or math.ceil((ANGULAR_DEGREE_NEEDED + 2) / 2)
    M_psi = psi_nodes or ANGULAR_DEGREE_NEEDED + 3
    if min(K, M_theta, P, M_psi) < 1:
        raise ValueError("quadrature orders must be positive")

    t, wt = roots_laguerre(K)
    u, wu = roots_legendre(P)
    theta = 2 * np.pi * np.arange(M_theta) / M_theta
    psi = 2 * np.pi * np.arange(M_psi) / M_psi
    cert = Certificate(radial_degree=2 * K - 1, theta_degree=M_theta - 1,
                       angular_degree=min(2 * P - 1, M_psi - 1))
    return QuadratureGrid(t=t, wt=wt, theta=theta, u=u, wu=wu / 2.0, psi=psi, certificate=cert)


def moment_check(grid: QuadratureGrid, m: int) -> float:
    """``int r**(2m) 2 r exp(-r**2) dr`` on the grid; equals ``m!`` when certified."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m > grid.certificate.radial_degree:
        raise ExactnessError(
            f"moment {m} exceeds radial certificate {grid.certificate.radial_degree}")
    return grid.radial_integral(lambda t: t ** m)


def warn_if_uncertified(grid: QuadratureGrid, n_trunc: int, degree: int) -> bool:
    if grid.certificate.covers(n_trunc, degree):
        return True
    warnings.warn(
        f"grid certificate {grid.certificate.as_dict()} does not cover N={n_trunc}, "
        f"degree={degree}; results are not exact", ExactnessWarning, stacklevel=3)
    return False
