//! Combinatorics and exact homology behind Goodwillie towers of polyhedral
//! products.
//!
//! - [`simplicial`]: complexes on `[m]`, full subcomplexes, missing faces,
//!   shiftedness.
//! - [`homology`]: integral homology by Smith normal form, the real
//!   moment-angle complex and its wedge splitting.
//! - [`lie`]: Lyndon words, standard bracketing, Witt counts.
//! - [`tower`]: generator indexing, excisive degrees and factor lists.
//! - [`convergence`]: classification and divergence witnesses.
//! - [`io`]: complex files and JSON.

pub mod convergence;
pub mod homology;
pub mod io;
pub mod lie;
pub mod simplicial;
pub mod tower;

pub use convergence::{classify, divergence_witnesses, Classification, ConvergenceReport, Witness};
pub use homology::{GradedAbelianGroup, Summand};
pub use io::{parse_complex, ParseError};
pub use lie::{Alphabet, HallWord, LyndonWord};
pub use simplicial::{Certificate, Simplex, SimplicialComplex, SimplicialError};
pub use tower::{
    full_decomposition, Decomposition, EnumerationOptions, Factor, Generator, GeneratorIndex,
    Indexing, MultiIndex, SpaceSpec, TowerError, Variant,
};
