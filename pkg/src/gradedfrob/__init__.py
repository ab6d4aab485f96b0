"""Exact computations with finite-dimensional algebras, their dual bimodules,
and the Z_n-graded algebras A(R, M, φ) built from tensor powers."""

from .algebra import Algebra, build_algebra, corner_algebra, product_algebra
from .catalog import CATALOG, make_example
from .claims import ClaimReport, default_suite, verify_claim
from .errors import No, Undecided, Yes
from .fields import GF, Q
from .frobenius import (
    FrobeniusData,
    NotFrobenius,
    associative_c_space,
    frobenius_form,
    is_inner,
    is_quasi_frobenius,
    is_symmetric,
    nakayama_automorphism,
    nakayama_permutation,
    twisted_presentation,
)
from .graded import (
    GradedAlgebra,
    build_A,
    build_A_dual,
    check_associative,
    graded_diagnostics,
    ore_crosscheck,
    symmetric_criterion,
    theorem_D_data,
)
from .modules import (
    dual_bimodule,
    hom_space,
    is_invertible_bimodule,
    modules_isomorphic,
    pic_order_of_dual,
    regular_bimodule,
    tensor_over_R,
    twisted_bimodule,
)
from .search import find_invertible_in_span
from .semisimple import jacobson_radical, semisimple_data

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "build_algebra",
    "corner_algebra",
    "product_algebra",
    "CATALOG",
    "make_example",
    "ClaimReport",
    "default_suite",
    "verify_claim",
    "No",
    "Undecided",
    "Yes",
    "GF",
    "Q",
    "FrobeniusData",
    "NotFrobenius",
    "associative_c_space",
    "frobenius_form",
    "is_inner",
    "is_quasi_frobenius",
    "is_symmetric",
    "nakayama_automorphism",
    "nakayama_permutation",
    "twisted_presentation",
    "GradedAlgebra",
    "build_A",
    "build_A_dual",
    "check_associative",
    "graded_diagnostics",
    "ore_crosscheck",
    "symmetric_criterion",
    "theorem_D_data",
    "dual_bimodule",
    "hom_space",
    "is_invertible_bimodule",
    "modules_isomorphic",
    "pic_order_of_dual",
    "regular_bimodule",
    "tensor_over_R",
    "twisted_bimodule",
    "find_invertible_in_span",
    "jacobson_radical",
    "semisimple_data",
]
