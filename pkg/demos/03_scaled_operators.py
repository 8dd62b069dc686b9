"""Why a quaternion multiple of an operator is not an operator matrix.

With scalars acting on the right, ``(alpha O) f`` is defined as
``(O f) conj(alpha)``. For non-real alpha this breaks the naive adjoint rule,
which is why the momentum ``-i (A_q - A_qbar)/sqrt 2`` is not self-adjoint.
"""
from quatcs import J_UNIT, K_UNIT, Quaternion, RQOperator, RQVector, adjoint_defect
from quatcs.observables import momentum_witness, naive_momentum

alpha = Quaternion(0, 1, 2, 0)  # i + 2j
u = RQVector.from_quaternions([K_UNIT])
v = RQVector.from_quaternions([J_UNIT])
lhs, rhs = adjoint_defect(alpha, RQOperator.identity(1), u, v)
print("<u|(alpha 1) v>             =", lhs)
print("<(conj(alpha) 1^dagger) u|v> =", rhs)

N = 6
w = momentum_witness(N)
if w is not None:
    u, v, (l, r) = w
    print("\nnaive momentum, witness pair:")
    print(" u =", [x for x in u.data.tolist() if any(x)], " v =", [x for x in v.data.tolist() if any(x)])
    print(" sides:", l, "vs", r)

P = naive_momentum(N)
l, r = adjoint_defect(P.alpha, P.base, RQVector.basis(N, 0, J_UNIT), RQVector.basis(N, 1, K_UNIT))
print("\nnot every pair separates the sides: u = e_0 j, v = e_1 k gives", l, "and", r)
