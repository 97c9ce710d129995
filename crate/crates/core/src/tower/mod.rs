//! Factor lists for the loop space decompositions of polyhedral products
//! under Goodwillie approximation.
//!
//! Generators are `α_{I,k}` (or `β_I` for the cone variants); Lie factors are
//! Hall words on them, each carrying an excisive degree `κ`. Only factors
//! with `κ ≥ 1` are listed, since `P_0(id)` is constant. Words are the Lyndon
//! basis with standard bracketing; a different Hall basis would give
//! different words with the same counts and degrees.

mod enumerate;
mod generator;
mod smash;

use thiserror::Error;

pub use enumerate::{
    bh_identity_factors, cone_factors, degree_comparison, enumerate_factors_multi,
    enumerate_factors_single, full_decomposition, hilton_milnor_spheres, product_factors, Census,
    Decomposition, DegreeRow, EnumerationOptions, Factor, FactorList, ProductFactor, Variant,
    DEFAULT_WORD_CAP,
};
pub use generator::{
    beta_alphabet, generator_alphabet, kappa_multi, kappa_single, Generator, GeneratorAlphabet,
    GeneratorIndex, Indexing, MultiIndex, SpaceSpec,
};
pub use smash::{alpha_space, SmashWord, SubcomplexHomology};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("fat wedge filtration not certified trivial; pass the assume flag to proceed anyway")]
    HypothesisUnverified,
    #[error("smash degree vector is zero")]
    ZeroSmashDegree,
    #[error("{what} has length {found}, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("X_{variable} = S^{dim} is not connected")]
    DisconnectedInput { variable: u32, dim: u32 },
    #[error("single-variable decomposition needs equal sphere dimensions")]
    NonUniformDims,
    #[error("enumeration exceeded {cap} words; raise the cap")]
    CapExceeded { cap: u64 },
    #[error("generator support is empty")]
    EmptyGeneratorSupport,
    #[error("generator powers must be at least 1")]
    ZeroPower,
    #[error("bound scale must be at least 1")]
    ZeroBoundScale,
}
