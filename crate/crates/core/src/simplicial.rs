//! Finite simplicial complexes on the vertex set `[m] = {1, ..., m}`.
//!
//! Faces are stored explicitly as bitmasks, which keeps downward closure,
//! full subcomplexes and the shiftedness test cheap at the scales this
//! crate targets (a few dozen vertices at most, usually far fewer).

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Largest vertex count a complex may have.
pub const MAX_VERTICES: u32 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("a complex needs at least one vertex")]
    NoVertices,
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(u32),
    #[error("vertex {vertex} is outside [1, {m}]")]
    VertexOutOfRange { vertex: u32, m: u32 },
    #[error("skeleton dimension {k} is outside [-1, {}]", *m as i64 - 1)]
    SkeletonOutOfRange { k: i64, m: u32 },
    #[error("the vertex set of a full subcomplex must be nonempty")]
    EmptySupport,
}

/// A simplex on `[m]`, stored as a bitmask (bit `i - 1` marks vertex `i`).
///
/// The derived `Ord` is *not* derived from the mask: simplices compare by
/// cardinality first and then lexicographically on their sorted vertex lists,
/// which is the canonical face order used everywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        let mut bits = 0u64;
        for v in vertices {
            assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
            bits |= 1 << (v - 1);
        }
        Simplex(bits)
    }

    /// Builds a simplex, checking every vertex against `[1, m]`.
    pub fn try_new<I: IntoIterator<Item = u32>>(
        m: u32,
        vertices: I,
    ) -> Result<Self, SimplicialError> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > m {
                return Err(SimplicialError::VertexOutOfRange { vertex: v, m });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Simplex(bits))
    }

    /// The simplex `[m]` on all vertices.
    pub fn full(m: u32) -> Self {
        if m >= 64 {
            Simplex(u64::MAX)
        } else {
            Simplex((1u64 << m) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        Simplex(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Geometric dimension, `-1` for the empty face.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: u32) -> Self {
        Simplex(self.0 | 1 << (v - 1))
    }

    pub fn without(self, v: u32) -> Self {
        Simplex(self.0 & !(1 << (v - 1)))
    }

    pub fn union(self, other: Simplex) -> Self {
        Simplex(self.0 | other.0)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }

    /// Codimension-one faces, in increasing order of the removed vertex.
    pub fn boundary_faces(self) -> impl Iterator<Item = Simplex> {
        self.vertices().map(move |v| self.without(v))
    }

    /// Every subset of this simplex, including the empty face and itself.
    pub fn subsets(self) -> impl Iterator<Item = Simplex> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(Simplex(out))
        })
    }

    /// Compact label: vertex ids concatenated when all are single digits,
    /// comma separated otherwise.
    pub fn label(self) -> String {
        let vs = self.to_vec();
        if vs.iter().all(|&v| v < 10) {
            vs.iter().map(|v| v.to_string()).collect()
        } else {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, v) in self.vertices().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// How a complex was constructed. Only consulted when choosing a
/// fat-wedge-filtration certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Origin {
    Facets,
    Skeleton,
}

/// Reasons to believe the fat wedge filtration of the real moment-angle
/// complex is trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Certificate {
    /// The complex is shifted with respect to the standard order on `[m]`.
    Shifted,
    /// The complex was built as a skeleton of the full simplex.
    SkeletonOfSimplex,
    /// No structural certificate, but the caller vouches for the hypothesis.
    UserAsserted,
    Unknown,
}

impl Certificate {
    pub fn is_known(self) -> bool {
        self != Certificate::Unknown
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Certificate::Shifted => "Shifted",
            Certificate::SkeletonOfSimplex => "SkeletonOfSimplex",
            Certificate::UserAsserted => "UserAsserted",
            Certificate::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite simplicial complex on `[m]` containing every vertex.
///
/// Faces are kept in canonical order (cardinality, then lexicographic),
/// starting with the empty face.
#[derive(Clone)]
pub struct SimplicialComplex {
    m: u32,
    faces: Vec<Simplex>,
    lookup: HashSet<Simplex>,
    origin: Origin,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("m", &self.m)
            .field("facets", &self.facets())
            .finish()
    }
}

fn check_vertex_count(m: u32) -> Result<(), SimplicialError> {
    if m < 1 {
        return Err(SimplicialError::NoVertices);
    }
    if m > MAX_VERTICES {
        return Err(SimplicialError::TooManyVertices(m));
    }
    Ok(())
}

impl SimplicialComplex {
    /// Downward closure of `facets`, together with every vertex and the
    /// empty face.
    pub fn from_facets<I, F>(m: u32, facets: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[u32]>,
    {
        check_vertex_count(m)?;
        let simplices = facets
            .into_iter()
            .map(|f| Simplex::try_new(m, f.as_ref().iter().copied()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_simplices(m, simplices)
    }

    /// Like [`from_facets`](Self::from_facets) but takes ready-made simplices.
    pub fn from_simplices<I>(m: u32, generators: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        check_vertex_count(m)?;
        let full = Simplex::full(m);
        let mut lookup = HashSet::new();
        lookup.insert(Simplex::EMPTY);
        for v in 1..=m {
            lookup.insert(Simplex::new([v]));
        }
        for g in generators {
            if !g.is_subset_of(full) {
                let bad = g.vertices().find(|&v| v > m).unwrap_or(0);
                return Err(SimplicialError::VertexOutOfRange { vertex: bad, m });
            }
            if lookup.contains(&g) {
                continue;
            }
            lookup.extend(g.subsets());
        }
        Ok(Self::from_lookup(m, lookup, Origin::Facets))
    }

    fn from_lookup(m: u32, lookup: HashSet<Simplex>, origin: Origin) -> Self {
        let mut faces: Vec<Simplex> = lookup.iter().copied().collect();
        faces.sort_unstable();
        SimplicialComplex {
            m,
            faces,
            lookup,
            origin,
        }
    }

    /// The full simplex `Δ^{m-1}`.
    pub fn full_simplex(m: u32) -> Result<Self, SimplicialError> {
        Self::skeleton(m, m as i64 - 1)
    }

    /// `sk_k Δ^{m-1}`: every subset of `[m]` with at most `k + 1` elements.
    ///
    /// `k = -1` is accepted by the range check but, because every vertex is
    /// forced into the complex, yields the same complex as `k = 0`.
    pub fn skeleton(m: u32, k: i64) -> Result<Self, SimplicialError> {
        check_vertex_count(m)?;
        if k < -1 || k > m as i64 - 1 {
            return Err(SimplicialError::SkeletonOutOfRange { k, m });
        }
        let max_len = (k + 1).max(1) as usize;
        let lookup = Simplex::full(m)
            .subsets()
            .filter(|s| s.len() <= max_len)
            .collect();
        Ok(Self::from_lookup(m, lookup, Origin::Skeleton))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// All faces in canonical order, the empty face first.
    pub fn faces(&self) -> &[Simplex] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.lookup.contains(&s)
    }

    pub fn dim(&self) -> i64 {
        self.faces.last().map_or(-1, |s| s.dim())
    }

    /// Faces of a fixed dimension, in canonical order.
    pub fn faces_of_dim(&self, d: i64) -> impl Iterator<Item = Simplex> + '_ {
        self.faces.iter().copied().filter(move |s| s.dim() == d)
    }

    /// Maximal faces in canonical order.
    pub fn facets(&self) -> Vec<Simplex> {
        let full = Simplex::full(self.m);
        self.faces
            .iter()
            .copied()
            .filter(|&s| {
                full.vertices()
                    .filter(|&v| !s.contains(v))
                    .all(|v| !self.contains(s.with(v)))
            })
            .collect()
    }

    /// Faces of `self` contained in `support`, in the original labels.
    pub fn faces_within(&self, support: Simplex) -> impl Iterator<Item = Simplex> + '_ {
        self.faces
            .iter()
            .copied()
            .filter(move |s| s.is_subset_of(support))
    }

    /// The full subcomplex `K_I = {σ ∈ K : σ ⊆ I}`, re-indexed so that the
    /// `j`-th smallest element of `I` becomes vertex `j`.
    pub fn full_subcomplex(&self, support: Simplex) -> Result<SimplicialComplex, SimplicialError> {
        if support.is_empty() {
            return Err(SimplicialError::EmptySupport);
        }
        if let Some(v) = support.vertices().find(|&v| v > self.m) {
            return Err(SimplicialError::VertexOutOfRange {
                vertex: v,
                m: self.m,
            });
        }
        let labels = support.to_vec();
        let relabel = |s: Simplex| {
            Simplex::new(
                labels
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| s.contains(v))
                    .map(|(j, _)| j as u32 + 1),
            )
        };
        let lookup = self.faces_within(support).map(relabel).collect();
        Ok(Self::from_lookup(
            labels.len() as u32,
            lookup,
            Origin::Facets,
        ))
    }

    /// Non-faces all of whose proper subsets are faces, in canonical order.
    pub fn minimal_missing_faces(&self) -> Vec<Simplex> {
        let full = Simplex::full(self.m);
        let mut found = HashSet::new();
        for &s in &self.faces {
            for v in full.vertices().filter(|&v| !s.contains(v)) {
                let cand = s.with(v);
                if !self.contains(cand) && cand.boundary_faces().all(|f| self.contains(f)) {
                    found.insert(cand);
                }
            }
        }
        let mut out: Vec<_> = found.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Shiftedness with respect to the identity order on `[m]`.
    ///
    /// Checking facets and elementary replacements `i -> j` with `j ∉ σ` is
    /// enough: every other replacement lands inside one of those faces.
    pub fn is_shifted(&self) -> bool {
        let full = Simplex::full(self.m);
        self.facets().into_iter().all(|sigma| {
            sigma.vertices().all(|i| {
                full.vertices()
                    .filter(|&j| j > i && !sigma.contains(j))
                    .all(|j| self.contains(sigma.without(i).with(j)))
            })
        })
    }

    pub fn is_full_simplex(&self) -> bool {
        self.contains(Simplex::full(self.m))
    }

    /// Strongest available reason for the fat wedge filtration to be trivial.
    pub fn fwf_certificate(&self, assume_trivial: bool) -> Certificate {
        if self.origin == Origin::Skeleton {
            Certificate::SkeletonOfSimplex
        } else if self.is_shifted() {
            Certificate::Shifted
        } else if assume_trivial {
            Certificate::UserAsserted
        } else {
            Certificate::Unknown
        }
    }

    /// The boundary of the simplex on `support`, in the original labels.
    pub fn simplex_boundary_faces(support: Simplex) -> Vec<Simplex> {
        let mut out: Vec<_> = support.subsets().filter(|&s| s != support).collect();
        out.sort_unstable();
        out
    }
}

/// Calls `visit` once for every complex on `[m]` that contains all vertices,
/// passing its faces of dimension at least one in canonical order.
///
/// There are 1, 2, 9, 114, 6894 and 7785062 of them for `m = 1..=6`.
pub fn for_each_complex<F: FnMut(&[Simplex])>(m: u32, mut visit: F) -> Result<(), SimplicialError> {
    check_vertex_count(m)?;
    if m > 6 {
        return Err(SimplicialError::TooManyVertices(m));
    }
    let mut candidates: Vec<Simplex> = Simplex::full(m)
        .subsets()
        .filter(|s| s.len() >= 2)
        .collect();
    candidates.sort_unstable();
    // Faces as a bitmask over the 2^m subsets of [m]; empty face and
    // vertices are always present.
    let mut present: u64 = 1;
    for v in 0..m {
        present |= 1 << (1u64 << v);
    }
    let mut chosen = Vec::new();
    fn rec<F: FnMut(&[Simplex])>(
        candidates: &[Simplex],
        present: u64,
        chosen: &mut Vec<Simplex>,
        visit: &mut F,
    ) {
        let Some((&s, rest)) = candidates.split_first() else {
            visit(chosen);
            return;
        };
        rec(rest, present, chosen, visit);
        if s.boundary_faces().all(|f| present & (1 << f.bits()) != 0) {
            chosen.push(s);
            rec(rest, present | (1 << s.bits()), chosen, visit);
            chosen.pop();
        }
    }
    rec(&candidates, present, &mut chosen, &mut visit);
    Ok(())
}
