"""A first look at quaternion arithmetic, the matrix picture and slices."""
import numpy as np

from quatcs import I_UNIT, J_UNIT, K_UNIT, ONE, Quaternion, slice_decompose, to_matrix, to_polar

# The units anticommute; products depend on the order.
print("i j =", I_UNIT * J_UNIT, "   j i =", J_UNIT * I_UNIT)
print("(1+i)(1+j) =", (ONE + I_UNIT) * (ONE + J_UNIT))

# Every quaternion is a 2x2 complex matrix whose determinant is |q|^2.
q = Quaternion(0.5, -1.0, 2.0, 0.25)
m = to_matrix(q)
print("\nmatrix form of", q)
print(np.round(m, 3))
print("det =", np.linalg.det(m).real, " |q|^2 =", q.norm2())

# Polar coordinates: q = r (cos theta + sin theta I) with I a unit pure quaternion.
p = to_polar(q)
print(f"\nr={p.r:.4f} theta={p.theta:.4f} phi={p.phi:.4f} psi={p.psi:.4f}")

# The same I defines the slice of q; inside it everything commutes.
s = slice_decompose(q)
print("slice unit I =", s.unit, " I^2 =", s.unit * s.unit)
w = Quaternion.real(0.3) + s.unit * 1.7
print("q w - w q =", q * w - w * q, "(same slice)")
print("q k - k q =", q * K_UNIT - K_UNIT * q, "(different slice)")
