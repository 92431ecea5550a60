"""Exact computations in the Hopf algebra of simplicial complexes."""

from .complex import (
    UNIT,
    SimplicialComplex,
    canonical_form,
    disjoint_union,
    enumerate_complexes,
    f_vector,
    faces,
    from_facets,
    induced,
    k_skeleton,
)
from .errors import CapacityError, InputError
from .graph import Graph, acyclic_orientations, chromatic_polynomial, flats
from .hopf import LinComb, antipode_flat, antipode_recursive, coproduct, product
from .poly import Poly
from .symfunc import SymPoly

__version__ = "0.1.0"

__all__ = [
    "UNIT", "SimplicialComplex", "canonical_form", "disjoint_union",
    "enumerate_complexes", "f_vector", "faces", "from_facets", "induced",
    "k_skeleton", "CapacityError", "InputError", "Graph",
    "acyclic_orientations", "chromatic_polynomial", "flats", "LinComb",
    "antipode_flat", "antipode_recursive", "coproduct", "product", "Poly",
    "SymPoly", "clear_caches",
]


def clear_caches() -> None:
    """Drop every memo table (canonical forms, chromatic polynomials, antipodes...)."""
    from . import characters, complex, graph, hopf

    for fn in (
        complex._canonical_facets,
        complex._enumerate,
        graph._chromatic_canonical,
        hopf._coproduct_canonical,
        hopf._antipode_flat_canonical,
        hopf._antipode_rec_canonical,
        characters._zeta_inverse_canonical,
    ):
        fn.cache_clear()
