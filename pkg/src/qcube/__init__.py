"""Quotient hypercubes: spectra, tree counts, thermodynamics, dashings.

Hypercube graphs quotiented by doubly even binary codes, their exact
Laplacian spectra (closed form, multiplicity table, numeric oracle),
spanning-tree counts, baobab multiplicity bounds, the entropy and latent
heat derived from them, and NDXOR edge-dashing propagation.
"""

__version__ = "0.1.0"

from qcube.codes import (
    GeneratorMatrix,
    column_permutation_equivalent,
    dual,
    hypercube_code,
    kmax,
    normalize_private_columns,
    parse_code,
    span,
    validate_doubly_even,
    wedge_weight,
    weight_distribution,
)
from qcube.counting import (
    BaobabBounds,
    baobab_bounds,
    tree_count_determinant,
    tree_count_from_spectrum,
    tree_count_hypercube,
)
from qcube.dashing import (
    CandidateBaobab,
    DashingAssignment,
    check_baobab,
    complete_dashing,
    ndxor,
    quadrilaterals,
    validate_dashing,
)
from qcube.graphs import QuotientGraph, build_quotient, is_isomorphic_small, laplacian
from qcube.spectra import (
    adjacency_spectrum,
    cospectral,
    meta_equivalence_scan,
    multiplicity_table,
    spectral_mode,
    spectrum_closed_form,
    spectrum_numeric,
)
from qcube.thermo import EntropyReport, entropy_approx, entropy_bounds, latent_heat

__all__ = [
    "GeneratorMatrix",
    "QuotientGraph",
    "BaobabBounds",
    "EntropyReport",
    "CandidateBaobab",
    "DashingAssignment",
    "parse_code",
    "hypercube_code",
    "validate_doubly_even",
    "span",
    "dual",
    "weight_distribution",
    "wedge_weight",
    "normalize_private_columns",
    "kmax",
    "column_permutation_equivalent",
    "build_quotient",
    "laplacian",
    "is_isomorphic_small",
    "spectrum_closed_form",
    "multiplicity_table",
    "spectrum_numeric",
    "adjacency_spectrum",
    "spectral_mode",
    "cospectral",
    "meta_equivalence_scan",
    "tree_count_from_spectrum",
    "tree_count_hypercube",
    "tree_count_determinant",
    "baobab_bounds",
    "entropy_bounds",
    "entropy_approx",
    "latent_heat",
    "ndxor",
    "quadrilaterals",
    "complete_dashing",
    "validate_dashing",
    "check_baobab",
]
