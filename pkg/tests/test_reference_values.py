"""Values frozen from independent computations (30-digit mpmath, hand expansion, sympy)."""
import math

import pytest

from quatcs import (
    I_UNIT, J_UNIT, ONE, Quaternion, Symbol, b_n, build_grid, hermite_nm, overlap, quantize,
    truncation_tail,
)

from .strategies import qclose


def test_overlap_reference():
    # 2x2 complex-matrix series for exp(-(|p|^2+|q|^2)/2) sum conj(q)^m p^m / m!, 30 digits
    p = Quaternion(0.3, 0.2, 0.0, 0.0)
    q = Quaternion(0.0, 0.0, 0.1, -0.4)
    ref = Quaternion(0.857037645890366484244026217245, -0.00876677927141073572646678609117,
                     0.0425649600986082473418956696704, 0.120474260465108780961955234537)
    assert qclose(overlap(p, q), ref, 1e-15)


def test_truncation_tail_reference():
    # 1 - e^{-1}(1 + 1 + 1/2 + 1/6)
    assert truncation_tail(1.0, 4) == pytest.approx(0.0189881568761538090786032795695, rel=1e-14)


def test_b_n_reference():
    assert b_n(0, 0.5) == pytest.approx(4.44288293815836624701588099006, rel=1e-15)
    assert b_n(1, 0.5) == pytest.approx(26.6572976289501974820952859404, rel=1e-15)


def test_two_index_reference_values():
    # H_{2,2} = |q|^4 - 4|q|^2 + 2 and H_{1,2} = q^2 conj(q) - 2q
    assert qclose(hermite_nm(2, 2, ONE + J_UNIT), ONE * -2.0, 1e-14)
    assert qclose(hermite_nm(1, 2, I_UNIT), -I_UNIT, 1e-14)


def test_quantized_q_squared_entries():
    A = quantize(Symbol.polynomial([(2, 1.0, 0)]), build_grid(6, 2), 6).operator
    assert A[0, 2].x0 == pytest.approx(math.sqrt(2), abs=1e-13)
    assert A[2, 4].x0 == pytest.approx(math.sqrt(12), abs=1e-13)
