"""Exact (co)homology of abelian covers of right-angled Artin group complexes.

Computes graded Betti numbers, rank varieties, cover (co)homology slices
and Cohen-Macaulay duality data for simplicial complexes, with every
combinatorial formula cross-verified against a chain-level exact
linear-algebra oracle.
"""

from .complexes import (
    Graph,
    SimplicialComplex,
    alexander_dual,
    build_complex,
    clique_complex,
    f_vector,
    full_simplex,
    induced_subcomplex,
    is_flag,
    link,
)
from .cover import compact_support_cohomology, cover_homology, growth_degree
from .exterior import (
    CoordinateMap,
    HilbertFunction,
    coordinate_ideal_data,
    exterior_sr_ring,
    is_regular_sequence,
    link_formula_cohomology,
    mult_cohomology,
    multiply,
)
from .homology import HomologyProfile, boundary_matrix, reduced_homology
from .linalg import GF, QQ, ZZ, ExactMatrix, kernel_basis, rank, smith_normal_form

__all__ = [
    "Graph", "SimplicialComplex", "alexander_dual", "build_complex",
    "clique_complex", "f_vector", "full_simplex", "induced_subcomplex",
    "is_flag", "link", "compact_support_cohomology", "cover_homology",
    "growth_degree", "CoordinateMap", "HilbertFunction",
    "coordinate_ideal_data", "exterior_sr_ring", "is_regular_sequence",
    "link_formula_cohomology", "mult_cohomology", "multiply",
    "HomologyProfile", "boundary_matrix", "reduced_homology",
    "GF", "QQ", "ZZ", "ExactMatrix", "kernel_basis", "rank",
    "smith_normal_form",
]

__version__ = "0.1.0"
