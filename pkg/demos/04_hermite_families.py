"""Coherent states built from quaternionic Hermite polynomials."""
import numpy as np

from quatcs import (
    HermiteFamilyS, HermiteFamilyTwo, Quaternion, analytic_Aq, analytic_Aqbar,
    hermite_cs_and_quantize, hermite_nm, hermite_orthogonality_s,
)
from quatcs.linalg import operator_distance

q = Quaternion(0.4, 0.3, -0.2, 0.6)
print("H_{1,1}(q) =", hermite_nm(1, 1, q), "  |q|^2 - 1 =", q.norm2() - 1)

G = hermite_orthogonality_s(0.5, 5)
print("\nGram matrix of h_{n,1/2}, real parts:")
print(np.round(G[..., 0], 12))

for fam in (HermiteFamilyS(0.5), HermiteFamilyTwo(0), HermiteFamilyTwo(2)):
    r = hermite_cs_and_quantize(fam, n_trunc=8)
    print(f"\n{fam}: |A_1 - 1| = {r.identity_defect:.1e}, "
          f"|A_qbar - A_q^dagger| = {r.adjoint_defect:.1e}")
    print(np.round(r.Aq.data[..., 0], 3))

r = hermite_cs_and_quantize(HermiteFamilyTwo(0), n_trunc=8)
print("\nn=0: A_q matches the canonical creation operator to",
      operator_distance(r.Aq, analytic_Aqbar(8)), "and A_qbar the annihilation operator to",
      operator_distance(r.Aqbar, analytic_Aq(8)))
