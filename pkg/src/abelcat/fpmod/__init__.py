"""Finitely presented modules over Z and Z/n."""

from .category import FpCategory, HomGroup, present_subquotient
from .matrix import Matrix, block_diagonal
from .module import DEFAULT_CAP, FpModule, RingSpec, elements, invariant_factors
from .normal_form import (SNFResult, hnf_basis, kernel_basis, lattice_contains,
                          reduce_mod_basis, snf, solve, solve_congruences)

__all__ = [
    "DEFAULT_CAP", "FpCategory", "FpModule", "HomGroup", "Matrix", "RingSpec",
    "SNFResult", "block_diagonal", "elements", "hnf_basis", "invariant_factors",
    "kernel_basis", "lattice_contains", "present_subquotient", "reduce_mod_basis",
    "snf", "solve", "solve_congruences",
]
