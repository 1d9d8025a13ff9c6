//! Decomposition and structure of tensor products of simple modules for
//! the group scheme SL2 over a field of prime characteristic.
//!
//! Simple modules are indexed by their highest weight. A tensor product
//! `L(r) ⊗ L(s)` splits into indecomposable summands indexed by digit
//! profiles over the base-`p` expansions of `r` and `s`; this crate
//! computes that splitting, classifies the summands (tilting, simple,
//! both, or neither), enumerates the ways a tilting module factors as
//! such a product, and reports the full submodule structure for products
//! with `L(1)` and `L(2)`.
//!
//! Everything is exact integer arithmetic on formal characters; no linear
//! algebra over the field is performed.

pub mod chars;
pub mod classify;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod fundamental;
pub mod padic;
pub mod render;
pub mod structure;
pub mod sweeps;

pub use chars::{
    character_from_factors, fundamental_tilting_character, peel_into_simples, peel_into_weyls,
    simple_character, tilting_character, weyl_character, FactorMultiset, FormalCharacter,
    WeylMultiset,
};
pub use classify::{
    classify_summand, construct_tensor_containing, enumerate_tilting_factorizations,
    indecomposable_tilting_product, is_indecomposable_product, product_is_this_tilting,
    FactorizationPair, SummandClass, TiltingFactorizations,
};
pub use corpus::{
    load_corpus, verify_corpus, verify_corpus_file, verify_entry, CorpusEdge, CorpusEntry,
    ExpectedSummand, VerifyFailure, VerifyReport,
};
pub use decompose::{
    decompose, socle_weight, summand_character, summand_count, summand_factors, Decomposition,
    SummandProfile,
};
pub use error::{Error, Result};
pub use fundamental::{
    fundamental_structure, fundamental_tilting_factors, fundamental_tilting_series, small_tensor_W,
    tilting_summand_weights, FundamentalTilting, WSet,
};
pub use padic::{
    admissible_expansion, digit, padic_digits, residue_data, tilde, weight_from_digits,
    AdmissibleExpansion, Prime, ResidueData, Weight,
};
pub use structure::{
    is_simple_weyl_weight, shift_decomposition, summand_layers, summand_structure, tensor_with_L2,
    tensor_with_natural, Component, Diagram, StructureCase, StructureReport, VertexId,
};
pub use sweeps::{
    conservation_sweep, containment_sweep, factorization_sweep, indecomposability_sweep,
    roundtrip_sweep, structure_sweep, tilting_soundness_sweep, weyl_simplicity_sweep, SweepOutcome,
};
