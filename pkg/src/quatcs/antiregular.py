"""Polynomials ``sum_m conj(q)**m c_m`` with right quaternion coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .quaternion import Quaternion, _coerce


@dataclass(frozen=True)
class AntiRegularPoly:
    """Anti-regular polynomial stored as its right coefficients ``c_0, c_1, ...``.

    Coefficients are `Quaternion` values; their components may be floats or
    exact (sympy) numbers, which lets the ladder-operator correspondence be
    checked without rounding.
    """

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(_coerce(c) for c in coeffs))

    @classmethod
    def zero(cls) -> "AntiRegularPoly":
        return cls(())

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient, -1 for the zero polynomial."""
        for m in range(len(self.coeffs) - 1, -1, -1):
            if any(x != 0 for x in self.coeffs[m].components):
                return m
        return -1

    def coefficient(self, m: int) -> Quaternion:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Quaternion(0, 0, 0, 0)

    def trimmed(self) -> "AntiRegularPoly":
        return AntiRegularPoly(self.coeffs[: self.degree + 1])

    def __add__(self, other: "AntiRegularPoly") -> "AntiRegularPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return AntiRegularPoly([self.coefficient(m) + other.coefficient(m) for m in range(n)])

    def __sub__(self, other: "AntiRegularPoly") -> "AntiRegularPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return AntiRegularPoly([self.coefficient(m) - other.coefficient(m) for m in range(n)])

    def scale_right(self, a) -> "AntiRegularPoly":
        """Right multiplication ``f(q) a``."""
        return AntiRegularPoly([c * a for c in self.coeffs])

    def __call__(self, q: Quaternion) -> Quaternion:
        # Horner: c_0 + qb (c_1 + qb (c_2 + ...))
        qb = q.conjugate()
        acc = Quaternion(0, 0, 0, 0)
        for c in reversed(self.coeffs):
            acc = c + qb * acc
        return acc

    def expand(self, q: Quaternion) -> Quaternion:
        """Term-by-term evaluation, the reference for `__call__`."""
        qb = q.conjugate()
        return sum((qb ** m * c for m, c in enumerate(self.coeffs)), Quaternion(0, 0, 0, 0))


def cullen_derivative(f: AntiRegularPoly) -> AntiRegularPoly:
    """Right Cullen derivative in ``conj(q)``: ``sum m conj(q)**(m-1) c_m``."""
    return AntiRegularPoly([c * m for m, c in enumerate(f.coeffs)][1:])


def multiply_by_conjugate_var(f: AntiRegularPoly) -> AntiRegularPoly:
    """``conj(q) f(q)``, shifting every coefficient up one degree."""
    return AntiRegularPoly((Quaternion(0, 0, 0, 0),) + f.coeffs)
