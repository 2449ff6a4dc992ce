"""Reconstruction algebras of type A for cyclic quotient surface singularities.

Submodules:
    cfrac     continued fractions, i/j-series, duality, invariant generators
    quiver    the quiver, arrow taxonomy, reversal isomorphism
    relations paths and the defining relations
    grading   weights mod r, arrow monomials, Hom-space indicator
    pathalg   truncated path algebra, congruence closure, graded dimensions
    homology  projective resolutions of vertex simples, global dimension
    moduli    minimal-resolution chart atlas, representations, dual graph
    cli       command-line front end
"""
from .cfrac import (
    IJSeries,
    Monomial,
    SigmaData,
    dual_pair,
    hj_expand,
    hj_value,
    ij_series,
    invariant_generators,
    riemenschneider_dual,
    sigma_series,
)
from .quiver import Arrow, Quiver, build_quiver, reverse_iso
from .relations import Path, Relation, generate_relations, relation_count
from .grading import check_homogeneity, hom_indicator, phi
from .pathalg import (
    ClassEngine,
    GradedDimTable,
    ResourceLimitExceeded,
    congruence_closure,
    enumerate_paths,
    graded_dims,
    verify_endomorphism_presentation,
)
from .homology import (
    ComplexDescription,
    global_dimension,
    resolution_of_simple,
    simple_count,
    verify_exactness,
)
from .moduli import (
    Chart,
    DualGraph,
    chart_overlap_iso,
    chart_representation,
    charts,
    dual_graph,
    stability_check,
    transition_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
