"""Exact-arithmetic toolkit for finite-dimensional algebras given by rational
structure constants: axiom checkers, doubling constructions, matched pairs,
bialgebra structures, a small instance catalog, and a text-file CLI."""

from .linalg import DimensionMismatch, SingularMatrix, frac, rational_sqrt
from .checks import (
    CheckReport,
    Endo,
    Form,
    RepTensor,
    StructureTensor,
    Violation,
    check_bimodule,
    check_commutative,
    check_complex_product,
    check_flat,
    check_hypersymplectic,
    check_jacobi,
    check_left_symmetric,
    check_metric_compatible,
    check_nondegenerate,
    check_parallel_form,
    check_plsa,
    check_representation,
    check_skew,
    check_special_symplectic,
    check_torsion_free,
    check_closed,
    nijenhuis_torsion,
    st,
    sub_adjacent,
)
from .constructions import (
    BadParams,
    CotangentExtensionData,
    DegenerateForm,
    DoubleData,
    FamilyParams,
    InvalidInput,
    IrrationalSquareRoot,
    NotARepresentation,
    NotAnLSA,
    SpecialSymplecticData,
    affine_cotangent_extension,
    coadjoint,
    cotangent_double,
    cotangent_double_from_connection,
    dual_left_action,
    dual_right_action,
    hypersymplectic_from_cotangent,
    hypersymplectic_from_tangent,
    lsa_from_symplectic,
    plsa_from_special_symplectic,
    post_affine_check,
    semidirect_lie,
    tangent_double,
)
from .matched import (
    DoubleExtensionData,
    MatchedPairData,
    NotMatched,
    bowtie_lsa,
    build_double_plsa,
    canonical_skew_pairing,
    check_matched_pair,
    double_extension,
    dual_actions,
)
from .bialgebra import (
    CoproductPair,
    NotAPLSBA,
    NotAnSLSBA,
    ParaKahlerData,
    R_operators,
    check_parakahler,
    coboundary_conditions,
    coboundary_coproducts,
    drinfeld_double,
    plsba_check,
    plsca_check,
    rr_brackets,
    slsba_check,
    slsba_coboundary,
    slsba_double,
    zero_coproducts,
)
from .catalog import CatalogEntry, UnknownEntry, catalog_get, catalog_list

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
