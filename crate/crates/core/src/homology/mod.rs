//! Exact integral homology of simplicial and cubical models.
//!
//! Everything is reduced homology. The wedge-splitting check compares the
//! cubical homology of the real moment-angle complex against the sum of
//! shifted homologies of the full subcomplexes `K_I`, `I ≠ ∅`.

mod chain;
mod cubical;
mod graded;
mod snf;

use std::collections::HashMap;

use rayon::prelude::*;

pub use chain::{ChainComplex, ChainComplexError};
pub use cubical::{
    cubical_homology, real_moment_angle_complex, Cell, CubicalComplex, CubicalError,
};
pub use graded::{GradedAbelianGroup, Summand};
pub use snf::{canonical_invariant_factors, smith_form, SmithForm, SparseMatrix};

use crate::simplicial::{Simplex, SimplicialComplex};

/// Simplicial chain complex augmented by the empty face in degree -1.
pub fn simplicial_chain_complex(k: &SimplicialComplex) -> ChainComplex {
    let top = (k.dim() + 2) as usize;
    let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); top];
    for &s in k.faces() {
        by_dim[s.len()].push(s);
    }
    let index: Vec<HashMap<Simplex, usize>> = by_dim
        .iter()
        .map(|ss| ss.iter().enumerate().map(|(i, &s)| (s, i)).collect())
        .collect();
    let labels = by_dim
        .iter()
        .map(|ss| ss.iter().map(|s| s.to_string()).collect())
        .collect();
    let boundaries = (1..top)
        .map(|n| {
            let cols = by_dim[n]
                .iter()
                .map(|s| {
                    s.vertices()
                        .enumerate()
                        .map(|(j, v)| {
                            let sign = if j % 2 == 0 { 1 } else { -1 };
                            (index[n - 1][&s.without(v)], sign)
                        })
                        .collect()
                })
                .collect();
            SparseMatrix::from_columns(by_dim[n - 1].len(), cols)
        })
        .collect();
    ChainComplex::new(-1, labels, boundaries).expect("simplicial boundary squares to zero")
}

/// Reduced integral homology of `|K|`.
pub fn simplicial_homology(k: &SimplicialComplex) -> GradedAbelianGroup {
    simplicial_chain_complex(k).homology()
}

/// Reduced homology of every full subcomplex `K_I`, `∅ ≠ I ⊆ [m]`, keyed by
/// `I` in the original labels.
pub fn full_subcomplex_homologies(k: &SimplicialComplex) -> Vec<(Simplex, GradedAbelianGroup)> {
    let mut supports: Vec<Simplex> = Simplex::full(k.m())
        .subsets()
        .filter(|s| !s.is_empty())
        .collect();
    supports.sort_unstable();
    supports
        .into_par_iter()
        .map(|i| {
            let h = if k.contains(i) {
                GradedAbelianGroup::zero()
            } else {
                simplicial_homology(&k.full_subcomplex(i).expect("nonempty support"))
            };
            (i, h)
        })
        .collect()
}

/// `⊕_{∅≠I⊆[m]} H̃_{*-1}(K_I)`: the homology the wedge decomposition of the
/// real moment-angle complex predicts.
pub fn wedge_splitting_homology(k: &SimplicialComplex) -> GradedAbelianGroup {
    full_subcomplex_homologies(k)
        .into_iter()
        .fold(GradedAbelianGroup::zero(), |acc, (_, h)| {
            acc.direct_sum(&h.suspend(1))
        })
}

/// Both sides of the wedge-splitting comparison for one complex.
#[derive(Debug, Clone)]
pub struct SplittingCheck {
    pub cells: usize,
    pub cubical: GradedAbelianGroup,
    pub wedge: GradedAbelianGroup,
}

impl SplittingCheck {
    pub fn run(k: &SimplicialComplex) -> Self {
        let rz = real_moment_angle_complex(k);
        let (cubical, wedge) =
            rayon::join(|| cubical_homology(&rz), || wedge_splitting_homology(k));
        SplittingCheck {
            cells: rz.cell_count(),
            cubical,
            wedge,
        }
    }

    pub fn passed(&self) -> bool {
        self.cubical == self.wedge
    }
}
