use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::TowerError;
use crate::lie::{Alphabet, Letter};
use crate::simplicial::{Simplex, SimplicialComplex};

/// Per-variable excisive degrees `(n_1, ..., n_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(n: Vec<u32>) -> Self {
        MultiIndex(n)
    }

    pub fn diagonal(m: u32, n: u32) -> Self {
        MultiIndex(vec![n; m as usize])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, factor: u32) -> Self {
        MultiIndex(self.0.iter().map(|&x| x * factor).collect())
    }

    pub(crate) fn check_len(&self, m: u32) -> Result<(), TowerError> {
        if self.0.len() != m as usize {
            return Err(TowerError::LengthMismatch {
                what: "multi-index",
                expected: m as usize,
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

/// Sphere inputs `X_i = S^{d_i}`.
///
/// With `pre_suspended` set, `dims` describe `ΣX_i` instead, and the input
/// spheres are one dimension lower.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpaceSpec {
    dims: Vec<u32>,
    pre_suspended: bool,
}

impl SpaceSpec {
    pub fn new(dims: Vec<u32>, pre_suspended: bool) -> Result<Self, TowerError> {
        let floor = if pre_suspended { 2 } else { 1 };
        if let Some((i, &d)) = dims.iter().enumerate().find(|(_, &d)| d < floor) {
            return Err(TowerError::DisconnectedInput {
                variable: i as u32 + 1,
                dim: d,
            });
        }
        Ok(SpaceSpec {
            dims,
            pre_suspended,
        })
    }

    /// Every `X_i = S^d`.
    pub fn uniform(m: u32, d: u32) -> Result<Self, TowerError> {
        Self::new(vec![d; m as usize], false)
    }

    pub fn m(&self) -> u32 {
        self.dims.len() as u32
    }

    pub fn pre_suspended(&self) -> bool {
        self.pre_suspended
    }

    /// Dimensions of the unsuspended inputs `X_i`.
    pub fn input_dims(&self) -> Vec<u32> {
        let shift = u32::from(self.pre_suspended);
        self.dims.iter().map(|&d| d - shift).collect()
    }

    pub fn input_dim(&self, variable: usize) -> u32 {
        self.dims[variable] - u32::from(self.pre_suspended)
    }

    pub fn is_uniform(&self) -> bool {
        self.dims.windows(2).all(|w| w[0] == w[1])
    }

    pub(crate) fn check_len(&self, m: u32) -> Result<(), TowerError> {
        if self.dims.len() != m as usize {
            return Err(TowerError::LengthMismatch {
                what: "dimension vector",
                expected: m as usize,
                found: self.dims.len(),
            });
        }
        Ok(())
    }
}

/// A pair `(I, k)` with `∅ ≠ I ⊆ [m]` and `k ∈ Z_{≥1}^I`, naming the
/// generator `α_{I,k} = |K_I| ∧ ⋀_{i∈I} X_i^{∧k_i}`.
///
/// Ordered by `(|I|, I lexicographic, Σk, k lexicographic)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorIndex {
    support: Simplex,
    powers: Vec<u32>,
}

impl GeneratorIndex {
    /// `powers[j]` belongs to the `j`-th smallest vertex of `support`.
    pub fn new(support: Simplex, powers: Vec<u32>) -> Result<Self, TowerError> {
        if support.is_empty() {
            return Err(TowerError::EmptyGeneratorSupport);
        }
        if powers.len() != support.len() {
            return Err(TowerError::LengthMismatch {
                what: "power vector",
                expected: support.len(),
                found: powers.len(),
            });
        }
        if powers.contains(&0) {
            return Err(TowerError::ZeroPower);
        }
        Ok(GeneratorIndex { support, powers })
    }

    pub fn support(&self) -> Simplex {
        self.support
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn total_power(&self) -> u32 {
        self.powers.iter().sum()
    }

    /// `b(I,k)`: the smash power of each `X_i` in `α_{I,k}`.
    pub fn multidegree(&self, m: u32) -> Vec<u32> {
        let mut out = vec![0; m as usize];
        for (v, &k) in self.support.vertices().zip(&self.powers) {
            out[v as usize - 1] = k;
        }
        out
    }

    /// `α_{I,k}` is canonically null when `I ∈ K`, since then `K_I` is a cone.
    pub fn is_null(&self, k: &SimplicialComplex) -> bool {
        k.contains(self.support)
    }
}

impl Ord for GeneratorIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .cmp(&other.support)
            .then_with(|| self.total_power().cmp(&other.total_power()))
            .then_with(|| self.powers.cmp(&other.powers))
    }
}

impl PartialOrd for GeneratorIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.powers.iter().map(|k| k.to_string()).collect();
        write!(f, "α{{{};{}}}", self.support.label(), ks.join(","))
    }
}

/// A letter of one of the decompositions: `α_{I,k}` or `β_I = |K_I| ∧ X̂^I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Alpha(GeneratorIndex),
    Beta(Simplex),
}

impl Generator {
    pub fn support(&self) -> Simplex {
        match self {
            Generator::Alpha(g) => g.support(),
            Generator::Beta(s) => *s,
        }
    }

    pub fn multidegree(&self, m: u32) -> Vec<u32> {
        match self {
            Generator::Alpha(g) => g.multidegree(m),
            Generator::Beta(s) => {
                let mut out = vec![0; m as usize];
                for v in s.vertices() {
                    out[v as usize - 1] = 1;
                }
                out
            }
        }
    }

    pub fn is_null(&self, k: &SimplicialComplex) -> bool {
        k.contains(self.support())
    }

    fn kind_rank(&self) -> u8 {
        match self {
            Generator::Alpha(_) => 0,
            Generator::Beta(_) => 1,
        }
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Generator::Alpha(a), Generator::Alpha(b)) => a.cmp(b),
            (Generator::Beta(a), Generator::Beta(b)) => a.cmp(b),
            _ => self.kind_rank().cmp(&other.kind_rank()),
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Alpha(g) => g.fmt(f),
            Generator::Beta(s) => write!(f, "β{{{}}}", s.label()),
        }
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Generator::Alpha(g) => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("I", &g.support().to_vec())?;
                map.serialize_entry("k", g.powers())?;
                map.end()
            }
            Generator::Beta(i) => {
                let mut map = s.serialize_map(Some(1))?;
                map.serialize_entry("I", &i.to_vec())?;
                map.end()
            }
        }
    }
}

/// Which generator set a decomposition is indexed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Indexing {
    /// `I_K`: only `I ∉ K`.
    #[default]
    Restricted,
    /// `I_m`: every nonempty `I`; words through null letters are discarded
    /// after enumeration.
    Full,
}

/// An ordered finite set of generators together with the matching
/// multigraded [`Alphabet`].
#[derive(Debug, Clone)]
pub struct GeneratorAlphabet {
    generators: Vec<Generator>,
    alphabet: Alphabet,
}

impl GeneratorAlphabet {
    pub fn new(m: u32, mut generators: Vec<Generator>) -> Self {
        generators.sort();
        generators.dedup();
        let letters = generators
            .iter()
            .map(|g| Letter {
                label: g.to_string(),
                multidegree: g.multidegree(m),
                connectivity: 0,
            })
            .collect();
        let alphabet = Alphabet::new(letters)
            .expect("generators have distinct labels and nonzero multidegree");
        GeneratorAlphabet {
            generators,
            alphabet,
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn nonempty_supports(m: u32) -> Vec<Simplex> {
    let mut s: Vec<Simplex> = Simplex::full(m)
        .subsets()
        .filter(|s| !s.is_empty())
        .collect();
    s.sort_unstable();
    s
}

/// Every power vector on `support` with `1 <= k_i <= caps_i`.
fn power_vectors(support: Simplex, caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for v in support.vertices() {
        let cap = caps[v as usize - 1];
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=cap).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out
}

/// All `(I, k)` with `1 <= k_i <= caps_i`, restricted to `I ∉ K` unless
/// `indexing` is [`Indexing::Full`], in generator order.
pub fn generator_alphabet(
    k: &SimplicialComplex,
    caps: &[u32],
    indexing: Indexing,
) -> GeneratorAlphabet {
    alpha_generators_where(k, caps, indexing, |_| true)
}

pub(crate) fn alpha_generators_where(
    k: &SimplicialComplex,
    caps: &[u32],
    indexing: Indexing,
    keep: impl Fn(&GeneratorIndex) -> bool,
) -> GeneratorAlphabet {
    let m = k.m();
    let mut gens = Vec::new();
    for support in nonempty_supports(m) {
        if indexing == Indexing::Restricted && k.contains(support) {
            continue;
        }
        for powers in power_vectors(support, caps) {
            let g = GeneratorIndex { support, powers };
            if keep(&g) {
                gens.push(Generator::Alpha(g));
            }
        }
    }
    GeneratorAlphabet::new(m, gens)
}

/// `β_I` for every nonempty `I` (or only `I ∉ K`).
pub fn beta_alphabet(k: &SimplicialComplex, indexing: Indexing) -> GeneratorAlphabet {
    let gens = nonempty_supports(k.m())
        .into_iter()
        .filter(|&s| indexing == Indexing::Full || !k.contains(s))
        .map(Generator::Beta)
        .collect();
    GeneratorAlphabet::new(k.m(), gens)
}

/// `κ = min_{i : a_i ≥ 1} ⌊n_i / a_i⌋`. Variables absent from the word
/// impose no constraint.
pub fn kappa_multi(n: &[u32], a: &[u32]) -> Result<u32, TowerError> {
    if n.len() != a.len() {
        return Err(TowerError::LengthMismatch {
            what: "smash degree",
            expected: n.len(),
            found: a.len(),
        });
    }
    n.iter()
        .zip(a)
        .filter(|(_, &ai)| ai >= 1)
        .map(|(&ni, &ai)| ni / ai)
        .min()
        .ok_or(TowerError::ZeroSmashDegree)
}

/// `κ = ⌊n / Σa_i⌋`.
pub fn kappa_single(n: u32, a: &[u32]) -> Result<u32, TowerError> {
    let total: u32 = a.iter().sum();
    if total == 0 {
        return Err(TowerError::ZeroSmashDegree);
    }
    Ok(n / total)
}
