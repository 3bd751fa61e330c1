"""Rack and quandle (co)homology with its d.g. bialgebra structure."""

__version__ = "0.1.0"

from .config import DEFAULT_MAX_DEGREE, MAX_BASIS_SIZE, MAX_DEGREE, SUITES
from .errors import (
    AxiomFailure,
    ContractViolation,
    InputError,
    RackhomError,
    ResourceLimitExceeded,
    UnsupportedOperation,
)
from .shelf import (
    CoefficientSystem,
    FiniteShelf,
    XSetAction,
    builtin,
    classify,
    conjugation,
    dihedral,
    orbits,
    permutation,
    remarkable_map,
    trivial,
    validate_xset,
)
from .exactlin import HomologyGroup, homology_of_pair, smith_normal_form, solve_integral
from .chain_complex import Chain, ChainBasisElement, boundary, cocycle_basis, face, homology_table
from .bialgebra import (
    BarElement,
    BarTensor,
    coproduct,
    counit,
    dendri,
    diff,
    homotopy_h,
    homotopy_hbar,
    normalize_word,
    resolve_hbar_sign,
    tau,
    tensor_diff,
)
from .products import (
    Cochain,
    CohomologyClass,
    action_contraction,
    coboundary,
    cup,
    half_cup,
    induced_coproduct,
    is_coboundary,
    witness,
    x_action,
)
from .splitting import (
    degree3_obstruction,
    late_split,
    nd_decomposition,
    nd_project,
    rewrite_alternative_generator,
    s_map,
    split_homology,
    verify_splitting,
)
from .data import dumps, load_cochain, load_shelf, load_xset
from .verify import SuiteReport, run_suite

__all__ = [
    # Config
    "DEFAULT_MAX_DEGREE",
    "MAX_BASIS_SIZE",
    "MAX_DEGREE",
    "SUITES",
    # Errors
    "AxiomFailure",
    "ContractViolation",
    "InputError",
    "RackhomError",
    "ResourceLimitExceeded",
    "UnsupportedOperation",
    # Shelves
    "CoefficientSystem",
    "FiniteShelf",
    "XSetAction",
    "builtin",
    "classify",
    "conjugation",
    "dihedral",
    "orbits",
    "permutation",
    "remarkable_map",
    "trivial",
    "validate_xset",
    # Exact linear algebra
    "HomologyGroup",
    "homology_of_pair",
    "smith_normal_form",
    "solve_integral",
    # Chain complex
    "Chain",
    "ChainBasisElement",
    "boundary",
    "cocycle_basis",
    "face",
    "homology_table",
    # Bialgebra
    "BarElement",
    "BarTensor",
    "coproduct",
    "counit",
    "dendri",
    "diff",
    "homotopy_h",
    "homotopy_hbar",
    "normalize_word",
    "resolve_hbar_sign",
    "tau",
    "tensor_diff",
    # Cochain products
    "Cochain",
    "CohomologyClass",
    "action_contraction",
    "coboundary",
    "cup",
    "half_cup",
    "induced_coproduct",
    "is_coboundary",
    "witness",
    "x_action",
    # Splitting
    "degree3_obstruction",
    "late_split",
    "nd_decomposition",
    "nd_project",
    "rewrite_alternative_generator",
    "s_map",
    "split_homology",
    "verify_splitting",
    # Data and verification
    "dumps",
    "load_cochain",
    "load_shelf",
    "load_xset",
    "SuiteReport",
    "run_suite",
]
