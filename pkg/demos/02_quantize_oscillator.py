"""Quantize q, conj(q) and |q|^2 by quadrature and recover the harmonic oscillator."""
import numpy as np

from quatcs import (
    Symbol, analytic_Aq, analytic_Aqbar, build_grid, commutator_check, number_operator, quantize,
)
from quatcs.linalg import operator_distance

N = 8
grid = build_grid(N, max_symbol_degree=2)
print(f"grid sizes {grid.sizes}, {grid.n_nodes} nodes, certificate {grid.certificate.as_dict()}")

Aq = quantize(Symbol.q(), grid, N)
print("\nreal part of A_q (annihilation):")
print(np.round(Aq.matrix[..., 0], 4))
print("distance to the closed form:", operator_distance(Aq.operator, analytic_Aq(N)))

A1 = quantize(Symbol.constant(), grid, N).operator
print("\nA_1 differs from the identity by", np.abs(A1.data[..., 0] - np.eye(N)).max())

H = quantize(Symbol.abs2(), grid, N).operator
print("\ndiagonal of A_|q|^2:", np.round(np.diag(H.data[..., 0]), 12))
print("diagonal of N + 1:  ", np.diag(number_operator(N).data[..., 0]) + 1)
AAd = (analytic_Aq(N) @ analytic_Aqbar(N)).data[..., 0]
print("diagonal of A_q A_qbar:", np.round(np.diag(AAd), 12))
print("(quantizing |q|^2 keeps every entry; the matrix product loses the last one to the cut)")

rep = commutator_check(N)
print(f"\n[A_q, A_qbar]: exact defect {rep.safe_defect} on 0..N-2, corner {rep.corner:g} "
      f"(= 1-N, so the trace is {rep.trace:g})")
