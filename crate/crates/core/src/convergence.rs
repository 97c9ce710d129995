//! Convergence classification and the sphere words witnessing
//! `v_h`-periodic divergence.
//!
//! Nothing chromatic is computed. A witness is a Hall word on the generators
//! `α_{I_0,k}` for the least minimal missing face `I_0`; each such word
//! suspends to a sphere, and there are infinitely many of them.

use std::ops::ControlFlow;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::lie::{for_each_lyndon, try_standard_bracketing, HallWord, WordBudget};
use crate::simplicial::{Certificate, Simplex, SimplicialComplex};
use crate::tower::{GeneratorIndex, SpaceSpec, TowerError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// `K` is the full simplex: the polyhedral product is a product.
    ConvergesEverywhere,
    /// Certified hypothesis and `K` not a simplex.
    IntegralConvergesVhDiverges,
    /// The fat wedge filtration is not known to be trivial.
    OutsideHypotheses,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::ConvergesEverywhere => "ConvergesEverywhere",
            Classification::IntegralConvergesVhDiverges => "IntegralConvergesVhDiverges",
            Classification::OutsideHypotheses => "OutsideHypotheses",
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvergenceReport {
    pub classification: Classification,
    pub certificate: Certificate,
    #[serde(serialize_with = "serialize_face")]
    pub witness_face: Option<Simplex>,
}

fn serialize_face<S: Serializer>(face: &Option<Simplex>, s: S) -> Result<S::Ok, S::Error> {
    match face {
        Some(f) => s.collect_seq(f.vertices()),
        None => s.serialize_none(),
    }
}

/// Classifies `K`. The witness face is the least minimal missing face in
/// (cardinality, lexicographic) order.
pub fn classify(k: &SimplicialComplex, assume_trivial_fwf: bool) -> ConvergenceReport {
    let certificate = k.fwf_certificate(assume_trivial_fwf);
    if k.is_full_simplex() {
        return ConvergenceReport {
            classification: Classification::ConvergesEverywhere,
            certificate,
            witness_face: None,
        };
    }
    if !certificate.is_known() {
        return ConvergenceReport {
            classification: Classification::OutsideHypotheses,
            certificate,
            witness_face: None,
        };
    }
    ConvergenceReport {
        classification: Classification::IntegralConvergesVhDiverges,
        certificate,
        witness_face: k.minimal_missing_faces().into_iter().next(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvergenceError {
    #[error("the full simplex has no missing face")]
    FullSimplex,
    #[error(transparent)]
    Tower(#[from] TowerError),
}

/// A Hall word on generators `α_{I_0,k}` whose suspension is a sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Distinct letters in generator order; `word` indexes into this list.
    pub generators: Vec<GeneratorIndex>,
    pub word: HallWord,
    /// `Σ_letters Σ_i k_i`.
    pub weight: u32,
    pub sphere_dim: u32,
}

impl Witness {
    pub fn rendered_word(&self) -> String {
        self.word.bracket().render_with(|c| format!("g{}", c + 1))
    }

    pub fn labelled_word(&self) -> String {
        self.word
            .bracket()
            .render_with(|c| self.generators[c].to_string())
    }

    /// The letters of the word, with multiplicity.
    pub fn letters(&self) -> Vec<&GeneratorIndex> {
        self.word
            .letters()
            .iter()
            .map(|&c| &self.generators[c])
            .collect()
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let gens: Vec<_> = self
            .generators
            .iter()
            .cloned()
            .map(crate::tower::Generator::Alpha)
            .collect();
        let mut st = s.serialize_struct("Witness", 4)?;
        st.serialize_field("word", &self.rendered_word())?;
        st.serialize_field("generators", &gens)?;
        st.serialize_field("weight", &self.weight)?;
        st.serialize_field("sphere_dim", &self.sphere_dim)?;
        st.end()
    }
}

struct WeightBudget<'a> {
    weights: &'a [u32],
    limit: u32,
    total: u32,
}

impl WordBudget for WeightBudget<'_> {
    fn try_push(&mut self, c: usize) -> bool {
        if self.total + self.weights[c] > self.limit {
            return false;
        }
        self.total += self.weights[c];
        true
    }

    fn pop(&mut self, c: usize) {
        self.total -= self.weights[c];
    }
}

/// Power vectors on `r` coordinates, each at least 1, with sum at most `w`,
/// ordered by sum and then lexicographically.
fn power_vectors_up_to(r: usize, w: u32) -> Vec<Vec<u32>> {
    fn rec(r: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        let reserve = (r - prefix.len() - 1) as u32;
        for k in 1..=left.saturating_sub(reserve) {
            prefix.push(k);
            rec(r, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if w as usize >= r {
        rec(r, w, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| {
        a.iter()
            .sum::<u32>()
            .cmp(&b.iter().sum())
            .then_with(|| a.cmp(b))
    });
    out
}

/// The first `count` witness words for the least minimal missing face.
///
/// Words are listed by weight `Σ k`, then length, then lexicographically on
/// letters, so each list is a prefix of any longer one. The dimension of
/// `Σωα(X)` is `1 + Σ_letters ((|I_0| - 2) + Σ_i k_i d_i)`.
pub fn divergence_witnesses(
    k: &SimplicialComplex,
    spec: &SpaceSpec,
    count: usize,
) -> Result<Vec<Witness>, ConvergenceError> {
    spec.check_len(k.m())?;
    let face = k
        .minimal_missing_faces()
        .into_iter()
        .next()
        .ok_or(ConvergenceError::FullSimplex)?;
    let r = face.len();
    let vertices = face.to_vec();
    let letter_dim = |g: &GeneratorIndex| -> u32 {
        (r as u32 - 2)
            + vertices
                .iter()
                .zip(g.powers())
                .map(|(&v, &kv)| kv * spec.input_dim(v as usize - 1))
                .sum::<u32>()
    };
    let mut out = Vec::with_capacity(count);
    let mut weight = r as u32;
    while out.len() < count {
        let letters: Vec<GeneratorIndex> = power_vectors_up_to(r, weight)
            .into_iter()
            .map(|p| GeneratorIndex::new(face, p).expect("powers are positive"))
            .collect();
        let weights: Vec<u32> = letters.iter().map(GeneratorIndex::total_power).collect();
        let mut budget = WeightBudget {
            weights: &weights,
            limit: weight,
            total: 0,
        };
        let mut stratum: Vec<Vec<usize>> = Vec::new();
        let max_len = (weight as usize) / r;
        let _ = for_each_lyndon(letters.len(), max_len, &mut budget, |w| {
            if w.iter().map(|&c| weights[c]).sum::<u32>() == weight {
                stratum.push(w.to_vec());
            }
            ControlFlow::Continue(())
        });
        stratum.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for w in stratum {
            if out.len() == count {
                break;
            }
            let mut distinct = w.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let word = try_standard_bracketing(&w)
                .expect("enumeration yields Lyndon words")
                .relabel(|c| distinct.binary_search(&c).expect("letter is present"));
            let sphere_dim = 1 + w.iter().map(|&c| letter_dim(&letters[c])).sum::<u32>();
            out.push(Witness {
                generators: distinct.iter().map(|&c| letters[c].clone()).collect(),
                word,
                weight,
                sphere_dim,
            });
        }
        weight += 1;
    }
    Ok(out)
}
