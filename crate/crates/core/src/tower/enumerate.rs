use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::generator::{
    alpha_generators_where, beta_alphabet, kappa_multi, kappa_single, Generator, GeneratorAlphabet,
    Indexing, MultiIndex, SpaceSpec,
};
use super::smash::{SmashWord, SubcomplexHomology};
use super::TowerError;
use crate::homology::GradedAbelianGroup;
use crate::lie::{for_each_lyndon, try_standard_bracketing, witt_count_u64, HallWord, WordBudget};
use crate::simplicial::{Certificate, SimplicialComplex};

pub const DEFAULT_WORD_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `Ω P_n⃗ (ΣX, *)^K`, generators `α_{I,k}`, `κ = min ⌊n_i/a_i⌋`.
    Multi,
    /// The diagonal version, `κ = ⌊n/Σa_i⌋`.
    Single,
    /// `Ω P_n⃗ (CX, X)^K`, generators `β_I`, `κ = min ⌊n_i/a_i⌋`.
    Cone,
    /// `Ω P_n(id)((CX, X)^K)`, generators `β_I`, degree `⌊n/|ω|⌋`.
    BhIdentity,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Multi => "multi",
            Variant::Single => "single",
            Variant::Cone => "cone",
            Variant::BhIdentity => "bh",
        }
    }

    /// Whether the degree is a multi-index rather than a single integer.
    pub fn is_multi(self) -> bool {
        matches!(self, Variant::Multi | Variant::Cone)
    }

    fn has_product_factors(self) -> bool {
        matches!(self, Variant::Multi | Variant::Single)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "multi" => Ok(Variant::Multi),
            "single" => Ok(Variant::Single),
            "cone" => Ok(Variant::Cone),
            "bh" | "bh-identity" => Ok(Variant::BhIdentity),
            other => Err(format!(
                "unknown variant '{other}' (expected multi, single, cone or bh)"
            )),
        }
    }
}

impl Serialize for Variant {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub indexing: Indexing,
    pub assume_trivial_fwf: bool,
    /// Abort once this many Lyndon words have been visited.
    pub cap: u64,
    /// Multiplies every enumeration bound while leaving `κ` computed from
    /// the true degrees. `1` is the certified bound.
    pub bound_scale: u32,
    /// Keep only words with `Σa_i` at most this. Truncates the list; it is
    /// no longer complete in the sense of the certified bound.
    pub max_total_power: Option<u32>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            indexing: Indexing::Restricted,
            assume_trivial_fwf: false,
            cap: DEFAULT_WORD_CAP,
            bound_scale: 1,
            max_total_power: None,
        }
    }
}

/// Bookkeeping for one enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    /// Letters admitted by the bound.
    pub alphabet_size: usize,
    /// Lyndon words inside the bound.
    pub words_visited: u64,
    /// Words through a null letter (only under full indexing).
    pub null_dropped: u64,
    /// Words inside the bound whose degree is zero.
    pub kappa_zero_dropped: u64,
    pub factors: u64,
    pub bound_scale: u32,
}

#[derive(Debug, Clone)]
enum DegreeRule {
    Multi(Vec<u32>),
    Single(u32),
    Length(u32),
}

impl DegreeRule {
    fn kappa(&self, a: &[u32], len: usize) -> u32 {
        match self {
            DegreeRule::Multi(n) => kappa_multi(n, a).expect("letters have nonzero multidegree"),
            DegreeRule::Single(n) => kappa_single(*n, a).expect("letters have nonzero multidegree"),
            DegreeRule::Length(n) => n / len as u32,
        }
    }
}

#[derive(Debug, Clone)]
enum Limit {
    PerVariable(Vec<u32>),
    Total(u32),
    Length,
}

struct Plan<'a> {
    k: &'a SimplicialComplex,
    letters: GeneratorAlphabet,
    degrees: Vec<Vec<u32>>,
    rule: DegreeRule,
    limit: Limit,
    caps: Vec<u32>,
    max_len: usize,
    max_total: u32,
}

impl<'a> Plan<'a> {
    fn new(
        k: &'a SimplicialComplex,
        letters: GeneratorAlphabet,
        rule: DegreeRule,
        limit: Limit,
        max_len: usize,
        cap_of: impl Fn(&[u32]) -> u32,
    ) -> Self {
        let m = k.m();
        let degrees: Vec<Vec<u32>> = letters
            .generators()
            .iter()
            .map(|g| g.multidegree(m))
            .collect();
        let caps = degrees.iter().map(|b| cap_of(b)).collect();
        Plan {
            k,
            letters,
            degrees,
            rule,
            limit,
            caps,
            max_len,
            max_total: u32::MAX,
        }
    }

    fn truncated(mut self, max_total_power: Option<u32>) -> Self {
        let Some(t) = max_total_power else {
            return self;
        };
        let keep: Vec<usize> = (0..self.letters.len())
            .filter(|&c| self.degrees[c].iter().sum::<u32>() <= t)
            .collect();
        let m = self.k.m();
        self.letters = GeneratorAlphabet::new(
            m,
            keep.iter()
                .map(|&c| self.letters.generators()[c].clone())
                .collect(),
        );
        self.degrees = keep.iter().map(|&c| self.degrees[c].clone()).collect();
        self.caps = keep.iter().map(|&c| self.caps[c]).collect();
        self.max_len = self.max_len.min(t as usize);
        self.max_total = t;
        self
    }
}

/// Certified multiplicity cap `d(I,k) = max_{i ∈ I} ⌊n_i / b_i⌋`.
fn multiplicity_cap(n: &[u32], b: &[u32]) -> u32 {
    n.iter()
        .zip(b)
        .filter(|(_, &bi)| bi > 0)
        .map(|(&ni, &bi)| ni / bi)
        .max()
        .unwrap_or(0)
}

struct Budget<'p> {
    degrees: &'p [Vec<u32>],
    limit: &'p Limit,
    max_total: u32,
    caps: &'p [u32],
    sum: Vec<u32>,
    total: u32,
    counts: Vec<u32>,
}

impl WordBudget for Budget<'_> {
    fn try_push(&mut self, c: usize) -> bool {
        if self.counts[c] >= self.caps[c] {
            return false;
        }
        let b = &self.degrees[c];
        let weight: u32 = b.iter().sum();
        if self.total + weight > self.max_total {
            return false;
        }
        let fits = match self.limit {
            Limit::PerVariable(l) => self.sum.iter().zip(b).zip(l).all(|((s, x), y)| s + x <= *y),
            Limit::Total(l) => self.total + weight <= *l,
            Limit::Length => true,
        };
        if !fits {
            return false;
        }
        self.counts[c] += 1;
        for (s, x) in self.sum.iter_mut().zip(b) {
            *s += x;
        }
        self.total += weight;
        true
    }

    fn pop(&mut self, c: usize) {
        self.counts[c] -= 1;
        let b = &self.degrees[c];
        for (s, x) in self.sum.iter_mut().zip(b) {
            *s -= x;
        }
        self.total -= b.iter().sum::<u32>();
    }
}

#[derive(Debug, Clone)]
struct RawWord {
    letters: Vec<usize>,
    a: Vec<u32>,
    kappa: u32,
}

impl RawWord {
    fn key_cmp(&self, other: &Self) -> Ordering {
        let sa: u32 = self.a.iter().sum();
        let sb: u32 = other.a.iter().sum();
        sa.cmp(&sb)
            .then_with(|| self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

fn run(plan: &Plan<'_>, opts: &EnumerationOptions) -> Result<(Vec<RawWord>, Census), TowerError> {
    let m = plan.k.m() as usize;
    let null: Vec<bool> = plan
        .letters
        .generators()
        .iter()
        .map(|g| g.is_null(plan.k))
        .collect();
    let mut census = Census {
        alphabet_size: plan.letters.len(),
        bound_scale: opts.bound_scale,
        ..Census::default()
    };
    let mut budget = Budget {
        degrees: &plan.degrees,
        limit: &plan.limit,
        max_total: plan.max_total,
        caps: &plan.caps,
        sum: vec![0; m],
        total: 0,
        counts: vec![0; plan.letters.len()],
    };
    let mut out = Vec::new();
    let mut exceeded = false;
    let _ = for_each_lyndon(plan.letters.len(), plan.max_len, &mut budget, |w| {
        census.words_visited += 1;
        if census.words_visited > opts.cap {
            exceeded = true;
            return ControlFlow::Break(());
        }
        if w.iter().any(|&c| null[c]) {
            census.null_dropped += 1;
            return ControlFlow::Continue(());
        }
        let mut a = vec![0u32; m];
        for &c in w {
            for (x, y) in a.iter_mut().zip(&plan.degrees[c]) {
                *x += y;
            }
        }
        let kappa = plan.rule.kappa(&a, w.len());
        if kappa == 0 {
            census.kappa_zero_dropped += 1;
        } else {
            out.push(RawWord {
                letters: w.to_vec(),
                a,
                kappa,
            });
        }
        ControlFlow::Continue(())
    });
    if exceeded {
        return Err(TowerError::CapExceeded { cap: opts.cap });
    }
    out.sort_by(RawWord::key_cmp);
    census.factors = out.len() as u64;
    Ok((out, census))
}

/// One term `P_κ(id)(Σ ωγ(X))` of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    generators: Vec<Generator>,
    word: HallWord,
    smash: SmashWord,
    kappa: u32,
    space: String,
    homology: GradedAbelianGroup,
    sphere_dim: Option<u32>,
}

impl Factor {
    /// Distinct letters of the word in generator order; `word` indexes into
    /// this list.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn word(&self) -> &HallWord {
        &self.word
    }

    /// The letters of the word, with multiplicity.
    pub fn letters(&self) -> Vec<&Generator> {
        self.word
            .letters()
            .iter()
            .map(|&c| &self.generators[c])
            .collect()
    }

    pub fn smash(&self) -> &SmashWord {
        &self.smash
    }

    /// `a⃗`.
    pub fn powers(&self) -> &[u32] {
        self.smash.powers()
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn space(&self) -> &str {
        &self.space
    }

    pub fn homology(&self) -> &GradedAbelianGroup {
        &self.homology
    }

    pub fn sphere_dim(&self) -> Option<u32> {
        self.sphere_dim
    }

    /// `(d, r)` when the homology is `ℤ^r` in the single degree `d`, as for
    /// a wedge of `r` copies of `S^d`.
    pub fn wedge_of_spheres(&self) -> Option<(u32, u64)> {
        let h = &self.homology;
        let mut it = h.iter();
        match (it.next(), it.next()) {
            (Some((d, s)), None) if s.torsion.is_empty() && s.rank > 0 => Some((d, s.rank)),
            _ => None,
        }
    }

    /// The bracket with generators named `g1, g2, ...`.
    pub fn rendered_word(&self) -> String {
        self.word.bracket().render_with(|c| format!("g{}", c + 1))
    }

    /// The bracket with generators named by their index.
    pub fn labelled_word(&self) -> String {
        self.word
            .bracket()
            .render_with(|c| self.generators[c].to_string())
    }
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Factor", 7)?;
        st.serialize_field("word", &self.rendered_word())?;
        st.serialize_field("generators", &self.generators)?;
        st.serialize_field("a", self.smash.powers())?;
        st.serialize_field("kappa", &self.kappa)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("homology", &self.homology)?;
        st.serialize_field("sphere_dim", &self.sphere_dim)?;
        st.end()
    }
}

fn build_factors(plan: &Plan<'_>, raw: Vec<RawWord>, spec: &SpaceSpec) -> Vec<Factor> {
    let m = plan.k.m();
    let gens = plan.letters.generators();
    let supports = raw
        .iter()
        .flat_map(|r| r.letters.iter().map(|&c| gens[c].support()));
    let cache = SubcomplexHomology::for_supports(plan.k, supports);
    raw.into_par_iter()
        .map(|r| {
            let mut distinct = r.letters.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let position: BTreeMap<usize, usize> =
                distinct.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let generators: Vec<Generator> = distinct.iter().map(|&c| gens[c].clone()).collect();
            let word = try_standard_bracketing(&r.letters)
                .expect("enumeration yields Lyndon words")
                .relabel(|c| position[&c]);
            let smash = SmashWord::from_generators(m, r.letters.iter().map(|&c| &gens[c]), 1);
            debug_assert_eq!(smash.powers(), r.a.as_slice());
            Factor {
                space: smash.render(spec),
                homology: smash.homology(&cache, spec),
                sphere_dim: smash.sphere_dim(plan.k, spec),
                generators,
                word,
                smash,
                kappa: r.kappa,
            }
        })
        .collect()
}

/// Sphere factors of `ΩΣ(S^{d-1} ∨ ... ∨ S^{d-1})` with `r` summands by
/// Hilton-Milnor: one `ΩS^{1+L(d-1)}` per Lyndon word of length `L` on `r`
/// letters. Returns counts by sphere dimension up to `max_dim`.
pub fn hilton_milnor_spheres(d: u32, r: u64, max_dim: u32) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    if d < 2 || r == 0 {
        return out;
    }
    let mut len = 1;
    while len * (d - 1) < max_dim {
        let c = witt_count_u64(r, len).expect("counts stay small below the cutoff");
        if c > 0 {
            out.insert(1 + len * (d - 1), c);
        }
        len += 1;
    }
    out
}

/// The `κ ≥ 1` factors of one decomposition with the enumeration census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorList {
    pub factors: Vec<Factor>,
    pub census: Census,
}

fn check_certificate(
    k: &SimplicialComplex,
    opts: &EnumerationOptions,
) -> Result<Certificate, TowerError> {
    let c = k.fwf_certificate(opts.assume_trivial_fwf);
    if c.is_known() {
        Ok(c)
    } else {
        Err(TowerError::HypothesisUnverified)
    }
}

fn check_scale(opts: &EnumerationOptions) -> Result<u32, TowerError> {
    if opts.bound_scale == 0 {
        return Err(TowerError::ZeroBoundScale);
    }
    Ok(opts.bound_scale)
}

fn multi_plan<'a>(
    k: &'a SimplicialComplex,
    n: &MultiIndex,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<Plan<'a>, TowerError> {
    check_certificate(k, opts)?;
    n.check_len(k.m())?;
    spec.check_len(k.m())?;
    let s = check_scale(opts)?;
    let bound = n.scaled(s);
    let letters = alpha_generators_where(k, bound.as_slice(), opts.indexing, |_| true);
    let b = bound.as_slice().to_vec();
    Ok(Plan::new(
        k,
        letters,
        DegreeRule::Multi(n.as_slice().to_vec()),
        Limit::PerVariable(b.clone()),
        bound.total() as usize,
        |d| multiplicity_cap(&b, d),
    ))
}

fn single_plan<'a>(
    k: &'a SimplicialComplex,
    n: u32,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<Plan<'a>, TowerError> {
    check_certificate(k, opts)?;
    spec.check_len(k.m())?;
    if !spec.is_uniform() {
        return Err(TowerError::NonUniformDims);
    }
    let bound = n * check_scale(opts)?;
    let caps = vec![bound; k.m() as usize];
    let letters = alpha_generators_where(k, &caps, opts.indexing, |g| g.total_power() <= bound);
    Ok(Plan::new(
        k,
        letters,
        DegreeRule::Single(n),
        Limit::Total(bound),
        bound as usize,
        |d| bound / d.iter().sum::<u32>(),
    ))
}

fn cone_plan<'a>(
    k: &'a SimplicialComplex,
    n: &MultiIndex,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<Plan<'a>, TowerError> {
    check_certificate(k, opts)?;
    n.check_len(k.m())?;
    spec.check_len(k.m())?;
    let bound = n.scaled(check_scale(opts)?);
    let b = bound.as_slice().to_vec();
    let all = beta_alphabet(k, opts.indexing);
    let kept = all
        .generators()
        .iter()
        .filter(|g| g.support().vertices().all(|v| b[v as usize - 1] >= 1))
        .cloned()
        .collect();
    let letters = GeneratorAlphabet::new(k.m(), kept);
    Ok(Plan::new(
        k,
        letters,
        DegreeRule::Multi(n.as_slice().to_vec()),
        Limit::PerVariable(b.clone()),
        bound.total() as usize,
        |d| multiplicity_cap(&b, d),
    ))
}

fn bh_plan<'a>(
    k: &'a SimplicialComplex,
    n: u32,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<Plan<'a>, TowerError> {
    check_certificate(k, opts)?;
    spec.check_len(k.m())?;
    let bound = n * check_scale(opts)?;
    let letters = beta_alphabet(k, opts.indexing);
    Ok(Plan::new(
        k,
        letters,
        DegreeRule::Length(n),
        Limit::Length,
        bound as usize,
        |_| bound,
    ))
}

fn factors_for(
    plan: Plan<'_>,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<FactorList, TowerError> {
    let plan = plan.truncated(opts.max_total_power);
    let (raw, census) = run(&plan, opts)?;
    let factors = build_factors(&plan, raw, spec);
    Ok(FactorList { factors, census })
}

/// Lie factors of the multivariable decomposition with `κ ≥ 1`, ordered by
/// `(Σa_i, |ω|, letters)`.
pub fn enumerate_factors_multi(
    k: &SimplicialComplex,
    n: &MultiIndex,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<FactorList, TowerError> {
    let plan = multi_plan(k, n, spec, opts)?;
    factors_for(plan, spec, opts)
}

/// Lie factors of the single-variable decomposition; every `d_i` must agree.
pub fn enumerate_factors_single(
    k: &SimplicialComplex,
    n: u32,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<FactorList, TowerError> {
    let plan = single_plan(k, n, spec, opts)?;
    factors_for(plan, spec, opts)
}

/// Factors of `Ω P_n⃗ (CX, X)^K` over the `β_I`.
pub fn cone_factors(
    k: &SimplicialComplex,
    n: &MultiIndex,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<FactorList, TowerError> {
    let plan = cone_plan(k, n, spec, opts)?;
    factors_for(plan, spec, opts)
}

/// Factors of `Ω P_n(id)((CX, X)^K)`, degree `⌊n/|ω|⌋`.
pub fn bh_identity_factors(
    k: &SimplicialComplex,
    n: u32,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<FactorList, TowerError> {
    let plan = bh_plan(k, n, spec, opts)?;
    factors_for(plan, spec, opts)
}

/// `Ω P_{n_i}(id)(ΣX_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductFactor {
    pub variable: u32,
    pub degree: u32,
    pub space: String,
    pub sphere_dim: u32,
}

pub fn product_factors(n: &[u32], spec: &SpaceSpec) -> Result<Vec<ProductFactor>, TowerError> {
    spec.check_len(n.len() as u32)?;
    Ok(n.iter()
        .enumerate()
        .map(|(i, &degree)| {
            let d = spec.input_dim(i) + 1;
            ProductFactor {
                variable: i as u32 + 1,
                degree,
                space: format!("S^{d}"),
                sphere_dim: d,
            }
        })
        .collect())
}

/// A word with its degree in the cone decomposition (single-variable form
/// `⌊n/Σa_i⌋`) and in the identity-on-wedge decomposition (`⌊n/|ω|⌋`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub word: String,
    pub generators: Vec<Generator>,
    pub smash_degree: u32,
    pub length: usize,
    pub kappa_cone: u32,
    pub kappa_bh: u32,
}

/// Both degrees for every non-null word in either the cone list or the
/// identity-on-wedge list at degree `n`.
pub fn degree_comparison(
    k: &SimplicialComplex,
    n: u32,
    spec: &SpaceSpec,
    opts: &EnumerationOptions,
) -> Result<Vec<DegreeRow>, TowerError> {
    let restricted = EnumerationOptions {
        indexing: Indexing::Restricted,
        ..*opts
    };
    let bh = bh_plan(k, n, spec, &restricted)?;
    let cone = Plan::new(
        k,
        beta_alphabet(k, Indexing::Restricted),
        DegreeRule::Single(n),
        Limit::Total(n * check_scale(opts)?),
        (n * opts.bound_scale) as usize,
        |_| n * opts.bound_scale,
    );
    let (bh_words, _) = run(&bh, &restricted)?;
    let (cone_words, _) = run(&cone, &restricted)?;
    let gens = bh.letters.generators();
    let mut words: Vec<Vec<usize>> = bh_words
        .into_iter()
        .chain(cone_words)
        .map(|r| r.letters)
        .collect();
    words.sort();
    words.dedup();
    let mut rows: Vec<(RawWord, DegreeRow)> = words
        .into_iter()
        .map(|letters| {
            let a = bh.letters.alphabet().multidegree(&letters);
            let smash_degree: u32 = a.iter().sum();
            let mut distinct = letters.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let position: BTreeMap<usize, usize> =
                distinct.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let word = try_standard_bracketing(&letters)
                .expect("enumeration yields Lyndon words")
                .relabel(|c| position[&c])
                .bracket()
                .render_with(|c| format!("g{}", c + 1));
            let row = DegreeRow {
                word,
                generators: distinct.iter().map(|&c| gens[c].clone()).collect(),
                smash_degree,
                length: letters.len(),
                kappa_cone: n / smash_degree,
                kappa_bh: n / letters.len() as u32,
            };
            (
                RawWord {
                    letters,
                    a,
                    kappa: 0,
                },
                row,
            )
        })
        .collect();
    rows.sort_by(|x, y| x.0.key_cmp(&y.0));
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

/// Lie factors, product factors and metadata for one variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub variant: Variant,
    pub n: Vec<u32>,
    pub dims: Vec<u32>,
    pub certificate: Certificate,
    pub indexing: &'static str,
    pub lie_factors: Vec<Factor>,
    pub product_factors: Vec<ProductFactor>,
    pub census: Census,
}

/// Assembles the requested decomposition. Multi and cone take one degree per
/// vertex; single and bh take a single degree.
pub fn full_decomposition(
    k: &SimplicialComplex,
    n: &[u32],
    spec: &SpaceSpec,
    variant: Variant,
    opts: &EnumerationOptions,
) -> Result<Decomposition, TowerError> {
    let certificate = check_certificate(k, opts)?;
    let m = k.m();
    let list = if variant.is_multi() {
        let n = MultiIndex::new(n.to_vec());
        n.check_len(m)?;
        match variant {
            Variant::Multi => enumerate_factors_multi(k, &n, spec, opts)?,
            _ => cone_factors(k, &n, spec, opts)?,
        }
    } else {
        if n.len() != 1 {
            return Err(TowerError::LengthMismatch {
                what: "degree",
                expected: 1,
                found: n.len(),
            });
        }
        match variant {
            Variant::Single => enumerate_factors_single(k, n[0], spec, opts)?,
            _ => bh_identity_factors(k, n[0], spec, opts)?,
        }
    };
    let product = if variant.has_product_factors() {
        let degrees = if variant.is_multi() {
            n.to_vec()
        } else {
            vec![n[0]; m as usize]
        };
        product_factors(&degrees, spec)?
    } else {
        Vec::new()
    };
    Ok(Decomposition {
        variant,
        n: n.to_vec(),
        dims: spec.input_dims(),
        certificate,
        indexing: match opts.indexing {
            Indexing::Restricted => "restricted",
            Indexing::Full => "full",
        },
        lie_factors: list.factors,
        product_factors: product,
        census: list.census,
    })
}
