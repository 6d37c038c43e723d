"""Exact GF(2) pipeline from filtered permutation complexes to a formality obstruction.

The package builds the filtered complexes of permutation strings, their
normalized cochains with cup and cup-1 products, the quadratic algebras that
describe the answer in closed form, explicit quadratic cycle representatives,
and the Hochschild-style obstruction class whose non-triviality is the final
verdict. Everything is exact arithmetic over the field with two elements.
"""

__version__ = "0.1.0"

from .gf2 import BitMatrix, kernel_basis, rank, rowspace_basis, solve
from .perms import all_perms, compose, inverse, act, project_pair, project_triple
from .complexes import (
    Complex,
    count_by_degree,
    degree,
    enumerate_complex,
    get_complex,
    in_filtration,
    swap_count,
)
from .cochains import (
    F2Chain,
    F2Cochain,
    ar,
    boundary,
    coboundary,
    coboundary_matrix,
    cochain_text,
    cup,
    cup1,
    from_simplices,
    omega,
    pair,
    parse_cochain,
    pullback,
    zero,
)
from .algebras import (
    HomWH,
    arnold_basis,
    arnold_mult,
    arnold_normalize,
    convolution,
    coproduct,
    coproduct_component,
    d_w1,
    dims,
    hochschild_d,
    parse_word,
    tau,
    w_basis,
    word_text,
    yb_basis,
    yb_normalize,
)
from .cycles import (
    class_of_cocycle,
    gamma,
    gamma_gamma,
    h2_cycle_table,
    h2_cycles,
    mult,
    circ,
    omega_product,
    pairing_matrix,
    t_cycle,
)
from .obstruction import (
    alpha,
    alpha_hom,
    beta,
    dual_d,
    gauge_shift,
    hochschild_matrix,
    is_coboundary,
    pair_alpha_beta,
    phi0,
    phi1,
    phi_d,
    random_gauge,
    triangle,
)

__all__ = [
    "__version__",
    "BitMatrix", "kernel_basis", "rank", "rowspace_basis", "solve",
    "all_perms", "compose", "inverse", "act", "project_pair", "project_triple",
    "Complex", "count_by_degree", "degree", "enumerate_complex", "get_complex",
    "in_filtration", "swap_count",
    "F2Chain", "F2Cochain", "ar", "boundary", "coboundary", "coboundary_matrix",
    "cochain_text", "cup", "cup1", "from_simplices", "omega", "pair",
    "parse_cochain", "pullback", "zero",
    "HomWH", "arnold_basis", "arnold_mult", "arnold_normalize", "convolution",
    "coproduct", "coproduct_component", "d_w1", "dims", "hochschild_d",
    "parse_word", "tau", "w_basis", "word_text", "yb_basis", "yb_normalize",
    "class_of_cocycle", "gamma", "gamma_gamma", "h2_cycle_table", "h2_cycles",
    "mult", "circ", "omega_product", "pairing_matrix", "t_cycle",
    "alpha", "alpha_hom", "beta", "dual_d", "gauge_shift", "hochschild_matrix",
    "is_coboundary", "pair_alpha_beta", "phi0", "phi1", "phi_d", "random_gauge",
    "triangle",
]
