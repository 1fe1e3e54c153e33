"""Exact Betti tables, Hilbert series and homology oracles for skeletons of
simplex unions glued along single points."""

from .betti import BettiTable, RingInvariants, invariants_from_table
from .complexes import (
    MAX_VERTICES,
    FatForestSpec,
    SimplicialComplex,
    bits_of,
    build_fat_forest,
    f_vector,
    facet_lines,
    induced_subcomplex,
    link,
    minimal_nonfaces,
    parse_facet_lines,
    skeleton,
    vertex_mask,
)
from .formulas import (
    SkeletonQuery,
    StrandVector,
    betti_closed,
    betti_via_strand_subtraction,
    fatforest_numerator,
    invariants_closed,
    linear_strand,
    skeleton_f_vector,
    skeleton_numerator,
    upper_strand,
)
from .homology import (
    DEFAULT_GUARD,
    GF2,
    GF3,
    RATIONALS,
    FieldSpec,
    OracleGuardError,
    hochster_betti,
    reduced_homology_dims,
    reisner_is_cm,
)
from .identities import IdentityReport, identity_report, parse_equation, render_identity
from .polynomials import (
    FVector,
    HilbertNumerator,
    IntPolynomial,
    binomial,
    numerator_from_fvector,
    one_minus_t_power,
)

__all__ = [
    "BettiTable",
    "DEFAULT_GUARD",
    "FVector",
    "FatForestSpec",
    "FieldSpec",
    "GF2",
    "GF3",
    "HilbertNumerator",
    "IdentityReport",
    "IntPolynomial",
    "MAX_VERTICES",
    "OracleGuardError",
    "RATIONALS",
    "RingInvariants",
    "SimplicialComplex",
    "SkeletonQuery",
    "StrandVector",
    "betti_closed",
    "betti_via_strand_subtraction",
    "binomial",
    "bits_of",
    "build_fat_forest",
    "f_vector",
    "facet_lines",
    "fatforest_numerator",
    "hochster_betti",
    "identity_report",
    "induced_subcomplex",
    "invariants_closed",
    "invariants_from_table",
    "linear_strand",
    "link",
    "minimal_nonfaces",
    "numerator_from_fvector",
    "one_minus_t_power",
    "parse_equation",
    "parse_facet_lines",
    "reduced_homology_dims",
    "reisner_is_cm",
    "render_identity",
    "skeleton",
    "skeleton_f_vector",
    "skeleton_numerator",
    "upper_strand",
    "vertex_mask",
]
