use std::collections::BTreeMap;

use rayon::prelude::*;

use super::generator::{Generator, GeneratorIndex, SpaceSpec};
use crate::homology::{simplicial_homology, GradedAbelianGroup};
use crate::simplicial::{Simplex, SimplicialComplex};

/// A formal space `Σ^t |K_{I_1}| ∧ ... ∧ |K_{I_r}| ∧ X_1^{∧a_1} ∧ ... ∧ X_m^{∧a_m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmashWord {
    complexes: Vec<Simplex>,
    powers: Vec<u32>,
    shift: u32,
}

impl SmashWord {
    /// The smash of the given generators (one `|K_I|` per occurrence),
    /// suspended `shift` times.
    pub fn from_generators<'a>(
        m: u32,
        letters: impl IntoIterator<Item = &'a Generator>,
        shift: u32,
    ) -> Self {
        let mut complexes = Vec::new();
        let mut powers = vec![0u32; m as usize];
        for g in letters {
            complexes.push(g.support());
            for (p, b) in powers.iter_mut().zip(g.multidegree(m)) {
                *p += b;
            }
        }
        complexes.sort_unstable();
        SmashWord {
            complexes,
            powers,
            shift,
        }
    }

    pub fn complexes(&self) -> &[Simplex] {
        &self.complexes
    }

    /// `a⃗`.
    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn total_power(&self) -> u32 {
        self.powers.iter().sum()
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn suspended(mut self, t: u32) -> Self {
        self.shift += t;
        self
    }

    /// `Σ a_i d_i`, the dimension of the sphere smash factor.
    pub fn sphere_degree(&self, spec: &SpaceSpec) -> u32 {
        self.powers
            .iter()
            .enumerate()
            .map(|(i, &a)| a * spec.input_dim(i))
            .sum()
    }

    /// Canonically null if some `K_{I_j}` is a cone, i.e. `I_j ∈ K`.
    pub fn is_null(&self, k: &SimplicialComplex) -> bool {
        self.complexes.iter().any(|&s| k.contains(s))
    }

    pub fn render(&self, spec: &SpaceSpec) -> String {
        let mut parts: Vec<String> = self
            .complexes
            .iter()
            .map(|s| format!("|K_{{{}}}|", s.label()))
            .collect();
        parts.push(format!("S^{}", self.sphere_degree(spec)));
        let body = parts.join("∧");
        if self.shift == 0 {
            body
        } else {
            format!("Σ^{} {}", self.shift, body)
        }
    }

    /// Reduced homology by the Künneth formula.
    pub fn homology(&self, cache: &SubcomplexHomology, spec: &SpaceSpec) -> GradedAbelianGroup {
        let mut h = GradedAbelianGroup::sphere(0);
        for &s in &self.complexes {
            h = h.smash(cache.get(s));
            if h.is_zero() {
                break;
            }
        }
        h.suspend(self.sphere_degree(spec) + self.shift)
    }

    /// Dimension of the sphere this space is, when every `K_{I_j}` is the
    /// boundary of a simplex (`I_j` a minimal missing face).
    pub fn sphere_dim(&self, k: &SimplicialComplex, spec: &SpaceSpec) -> Option<u32> {
        let mut dim = self.shift + self.sphere_degree(spec);
        for &s in &self.complexes {
            if !is_minimal_missing(k, s) {
                return None;
            }
            dim += s.len() as u32 - 2;
        }
        Some(dim)
    }
}

fn is_minimal_missing(k: &SimplicialComplex, s: Simplex) -> bool {
    !k.contains(s) && s.boundary_faces().all(|f| k.contains(f))
}

/// `α_{I,k}(X) = |K_I| ∧ ⋀_{i∈I} X_i^{∧k_i}`, unsuspended.
pub fn alpha_space(g: &GeneratorIndex, m: u32) -> SmashWord {
    SmashWord::from_generators(m, [&Generator::Alpha(g.clone())], 0)
}

/// Reduced homology of full subcomplexes `K_I`, computed once per support.
#[derive(Debug, Clone, Default)]
pub struct SubcomplexHomology {
    groups: BTreeMap<Simplex, GradedAbelianGroup>,
}

impl SubcomplexHomology {
    pub fn for_supports(
        k: &SimplicialComplex,
        supports: impl IntoIterator<Item = Simplex>,
    ) -> Self {
        let mut wanted: Vec<Simplex> = supports.into_iter().collect();
        wanted.sort_unstable();
        wanted.dedup();
        let groups = wanted
            .into_par_iter()
            .map(|s| {
                let h = if k.contains(s) {
                    GradedAbelianGroup::zero()
                } else {
                    simplicial_homology(&k.full_subcomplex(s).expect("nonempty support"))
                };
                (s, h)
            })
            .collect();
        SubcomplexHomology { groups }
    }

    /// Panics if `s` was not requested at construction.
    pub fn get(&self, s: Simplex) -> &GradedAbelianGroup {
        self.groups
            .get(&s)
            .unwrap_or_else(|| panic!("no homology cached for K_{s}"))
    }
}
