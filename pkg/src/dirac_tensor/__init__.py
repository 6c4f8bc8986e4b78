"""Exact and numerical verification of the one-component tensor form of the Dirac equation."""

__version__ = "0.1.0"

from .basis import BasisTriple, builtin_triple, eta_from_uv, random_triple, solve_w, spinor_from_u, validate_uv
from .duality import Bivector, contract, hodge_dual, spinor_pair_tensor, spinor_tensor, tensor_from_vec3
from .equivalence import (NonTransversal, ScalarComponentField, current_direct, current_from_scalar,
                          eliminate, fourth_order_residual, phi_from_tensor, reconstruct_spinor)
from .fields import FieldConfig, GridBackend, PolyBackend, dirac_residual, second_order_residual
from .grid import GridSolution, GridSpec, integrate_dirac
from .lorentz import SpinHalfMap, random_sl2c, spinor_rep, vector_rep
from .numbers import GaussQ
from .poly import Poly
from .verify import Report, convergence_study, run_verification

__all__ = [
    "__version__", "BasisTriple", "builtin_triple", "eta_from_uv", "random_triple", "solve_w",
    "spinor_from_u", "validate_uv", "Bivector", "contract", "hodge_dual", "spinor_pair_tensor",
    "spinor_tensor", "tensor_from_vec3", "NonTransversal", "ScalarComponentField", "current_direct",
    "current_from_scalar", "eliminate", "fourth_order_residual", "phi_from_tensor",
    "reconstruct_spinor", "FieldConfig", "GridBackend", "PolyBackend", "dirac_residual",
    "second_order_residual", "GridSolution", "GridSpec", "integrate_dirac", "SpinHalfMap",
    "random_sl2c", "spinor_rep", "vector_rep", "GaussQ", "Poly", "Report", "convergence_study",
    "run_verification",
]
