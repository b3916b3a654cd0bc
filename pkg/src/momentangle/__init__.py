"""Exact-integer homology of moment-angle complexes and symbolic
iterated higher Whitehead products."""

from .complexes import (SimplicialComplex, boundary_simplex, contains_labeled,
                        from_maximal_faces, full_subcomplex, glue, j_operation,
                        join, simplex, skeleton, union)
from .homology import (GradedChainComplex, HomologyGroup, homology_basis,
                       homology_of, reduced_simplicial_homology)
from .koszul import (KoszulChain, hochster_chain, hochster_decomposition,
                     koszul_complex, multiply, parse_chain, shuffle_sign,
                     verify_hochster, zk_homology)
from .snf import smith_normal_form
from .whitehead import (dimension, enumerate_products, hurewicz_chain,
                        is_defined, is_trivial, minimal_complex, parse,
                        realize_evidence, wdelta_evidence)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex", "boundary_simplex", "contains_labeled",
    "from_maximal_faces", "full_subcomplex", "glue", "j_operation", "join",
    "simplex", "skeleton", "union",
    "GradedChainComplex", "HomologyGroup", "homology_basis", "homology_of",
    "reduced_simplicial_homology",
    "KoszulChain", "hochster_chain", "hochster_decomposition",
    "koszul_complex", "multiply", "parse_chain", "shuffle_sign",
    "verify_hochster", "zk_homology",
    "smith_normal_form",
    "dimension", "enumerate_products", "hurewicz_chain", "is_defined",
    "is_trivial", "minimal_complex", "parse", "realize_evidence",
    "wdelta_evidence",
]
