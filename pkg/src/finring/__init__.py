"""Finite ring workbench.

Construction of finite rings as formal matrix rings over local bases,
structure extraction (radical, primitive idempotents, top profile),
socle/annihilator lattices with Nakayama permutations, and the
cardinality-based quasi-Frobenius classification layer.
"""
from .bounds import DEFAULT, Bounds
from .core import (
    AssociativityViolation,
    AxiomViolation,
    FiniteModule,
    FiniteRing,
    InternalInconsistency,
    NonIntegralLength,
    NotIdempotent,
    NotLocal,
    NotSemisimple,
    NotSubmodule,
    PreconditionUnmet,
    RingError,
    Submodule,
    TooLarge,
    build_table_ring,
    ideal_generated,
    quotient_module,
    regular_module,
    semisimple_multiplicities,
    table_isomorphic,
    units,
)
from .structure import (
    TopProfile,
    jacobson_radical,
    primitive_decomposition,
    simple_type,
    top_profile,
)
from .matrix import (
    BimGroup,
    BimRegular,
    FormalMatrixSpec,
    GFq,
    TrivialExt,
    TruncatedPoly,
    Zpk,
    basic_ring,
    build_formal_matrix,
    corner_ring,
    make_local,
    trivial_extension,
    zero_product_copy,
)
from .socle import (
    NakayamaResult,
    annihilator,
    annihilator_duality_report,
    homogeneous_component,
    is_annihilator_ideal,
    is_kasch,
    is_min_annihilator,
    is_qf2,
    minimal_one_sided_ideals,
    nakayama_permutation,
    socle_module,
    socles,
    submodule_lattice,
    verify_annihilator_duality,
)
from .cardinality import (
    LengthFunction,
    gen_dim_condition,
    generalized_dimension,
    honold_suite,
    is_d_ring,
    is_frobenius,
    is_qf,
    maximal_ideals,
    qf_simple_formula_check,
    respects_multiplicities,
    self_injective_right,
    series_dimension,
    size_condition,
    socle_principal,
)
from .dsl import (
    ResolutionError,
    RingSpecAST,
    SpecSyntaxError,
    parse_file,
    parse_spec,
    pretty,
    resolve,
)
from .gallery import EXPECTED, GALLERY, build_gallery_ring, gallery_names, gallery_text
from .report import ClassificationReport, classify
from .sweep import CorpusEntry, build_entry, corpus_entries
from .theorems import (
    ALL_THEOREMS,
    TheoremOutcome,
    UnknownTheorem,
    check_ring,
    morita_outcomes,
    parse_plan,
)

__all__ = [
    "ALL_THEOREMS", "AssociativityViolation", "AxiomViolation", "BimGroup",
    "BimRegular", "Bounds", "ClassificationReport", "CorpusEntry", "DEFAULT",
    "EXPECTED", "FiniteModule", "FiniteRing", "FormalMatrixSpec", "GALLERY",
    "GFq", "InternalInconsistency", "LengthFunction", "NakayamaResult",
    "NonIntegralLength", "NotIdempotent", "NotLocal", "NotSemisimple",
    "NotSubmodule", "PreconditionUnmet", "ResolutionError", "RingError",
    "RingSpecAST", "SpecSyntaxError", "Submodule", "TheoremOutcome",
    "TooLarge", "TopProfile", "TrivialExt", "TruncatedPoly", "UnknownTheorem",
    "Zpk", "annihilator", "annihilator_duality_report", "basic_ring",
    "build_entry", "build_formal_matrix", "build_gallery_ring",
    "build_table_ring", "check_ring", "classify", "corner_ring",
    "corpus_entries", "gallery_names", "gallery_text", "gen_dim_condition",
    "generalized_dimension", "homogeneous_component", "honold_suite",
    "ideal_generated", "is_annihilator_ideal", "is_d_ring", "is_frobenius",
    "is_kasch", "is_min_annihilator", "is_qf", "is_qf2", "jacobson_radical",
    "make_local", "maximal_ideals", "minimal_one_sided_ideals",
    "morita_outcomes", "nakayama_permutation", "parse_file", "parse_plan",
    "parse_spec", "pretty", "primitive_decomposition",
    "qf_simple_formula_check", "quotient_module", "regular_module",
    "resolve", "respects_multiplicities", "self_injective_right",
    "semisimple_multiplicities", "series_dimension", "simple_type",
    "size_condition", "socle_module", "socle_principal", "socles",
    "submodule_lattice", "table_isomorphic", "top_profile",
    "trivial_extension", "units", "verify_annihilator_duality",
    "zero_product_copy",
]
