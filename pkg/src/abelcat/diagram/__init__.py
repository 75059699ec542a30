"""Diagrams, exactness and grid lemma checkers, and random generators."""

from .commute import (ALL_PATHS, ASSERTED_PAIRS, Arrow, Diagram, ExactClaim, check_commutes,
                      check_diagram, check_exact_claims)
from .generate import KINDS, Bounds, Generator, category_for, generate, nested_grid
from .lemmas import (BOTTOM_FROM_TOP, TOP_FROM_BOTTOM, GridSpec, grid_commutes, grid_sum,
                     replace_arrow, verify_exactness_criteria, verify_left_exact_grid,
                     verify_nine_lemma)
from .suites import (check_universal_properties, lemma_suites, suite_exactness_criteria,
                     suite_grids, suite_kercok, suite_universal_properties)

__all__ = [
    "ALL_PATHS", "ASSERTED_PAIRS", "Arrow", "BOTTOM_FROM_TOP", "Bounds", "Diagram",
    "ExactClaim", "Generator", "GridSpec", "KINDS", "TOP_FROM_BOTTOM", "category_for",
    "check_commutes", "check_diagram", "check_exact_claims", "check_universal_properties",
    "generate", "grid_commutes", "nested_grid", "grid_sum", "lemma_suites", "replace_arrow",
    "suite_exactness_criteria", "suite_grids", "suite_kercok", "suite_universal_properties",
    "verify_exactness_criteria", "verify_left_exact_grid", "verify_nine_lemma",
]
