"""Coherent-state quantization of the quaternions on truncated Fock spaces."""
from .antiregular import AntiRegularPoly, cullen_derivative, multiply_by_conjugate_var
from .coherent import (
    CSVector, TruncationWarning, cs_eigen_check, cs_from_exponential, cs_vector, in_cs_domain,
    overlap, truncation_tail,
)
from .hermite import (
    HermiteFamilyS, HermiteFamilyTwo, b_n, hermite_cs_and_quantize, hermite_n, hermite_nm,
    hermite_orthogonality_s,
)
from .linalg import (
    DimensionError, RQOperator, RQVector, ScaledOperator, adjoint, adjoint_defect, apply,
    commutator, inner, matmul, scaled_apply,
)
from .observables import (
    berezin_transform, differential_model_check, lower_symbol, naive_momentum, number_operator,
    oscillator_algebra_check, position_operator,
)
from .quadrature import ExactnessError, ExactnessWarning, QuadratureGrid, build_grid, moment_check
from .quantize import (
    QuantizationResult, Symbol, analytic_Aq, analytic_Aqbar, commutator_check, quantize,
    resolution_identity_check,
)
from .quaternion import (
    I_UNIT, J_UNIT, K_UNIT, ONE, PolarForm, Quaternion, SlicePoint, StructureError, exp_pair,
    from_matrix, from_polar, multiply, slice_decompose, to_matrix, to_polar,
)
from .report import SuiteReport, emit_report, run_suite
from .slices import (
    SliceOperator, canonical_commutation_check, slice_operators, slice_resolution_check,
)

__version__ = "0.1.0"
