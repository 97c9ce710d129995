//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls the enumeration code under test: words are all letter
//! sequences inside the bound, kept when strictly smaller than every proper
//! rotation, and degrees come straight from the formulas.

#![allow(dead_code)]

use polytower::SimplicialComplex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub support: Vec<u32>,
    /// `None` for a `β` letter.
    pub k: Option<Vec<u32>>,
}

impl Letter {
    pub fn multidegree(&self, m: u32) -> Vec<u32> {
        let mut a = vec![0; m as usize];
        for (j, &v) in self.support.iter().enumerate() {
            a[v as usize - 1] = self.k.as_ref().map_or(1, |k| k[j]);
        }
        a
    }

    pub fn label(&self) -> String {
        let s: String = self.support.iter().map(|v| v.to_string()).collect();
        match &self.k {
            Some(k) => {
                let ks: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                format!("α{{{s};{}}}", ks.join(","))
            }
            None => format!("β{{{s}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleFactor {
    pub word: String,
    pub a: Vec<u32>,
    pub kappa: u32,
}

fn is_face(k: &SimplicialComplex, support: &[u32]) -> bool {
    k.contains(polytower::Simplex::new(support.iter().copied()))
}

/// Nonempty subsets of `[m]` by size and then lexicographically.
pub fn supports(m: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (1u64..1 << m)
        .map(|bits| (1..=m).filter(|v| bits >> (v - 1) & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn power_vectors(caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &c in caps {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=c).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// `α_{I,k}` with `k_i <= caps_i`, ordered by `I`, then `Σk`, then `k`.
pub fn alpha_letters(k: &SimplicialComplex, caps: &[u32], full: bool) -> Vec<Letter> {
    let mut out = Vec::new();
    for s in supports(k.m()) {
        if !full && is_face(k, &s) {
            continue;
        }
        let c: Vec<u32> = s.iter().map(|&v| caps[v as usize - 1]).collect();
        let mut pv = power_vectors(&c);
        pv.sort_by(|a, b| {
            a.iter()
                .sum::<u32>()
                .cmp(&b.iter().sum())
                .then_with(|| a.cmp(b))
        });
        out.extend(pv.into_iter().map(|p| Letter {
            support: s.clone(),
            k: Some(p),
        }));
    }
    out
}

pub fn beta_letters(k: &SimplicialComplex, full: bool) -> Vec<Letter> {
    supports(k.m())
        .into_iter()
        .filter(|s| full || !is_face(k, s))
        .map(|s| Letter {
            support: s,
            k: None,
        })
        .collect()
}

pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty()
        && (1..w.len()).all(|r| {
            let rot: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
            w < rot.as_slice()
        })
}

/// Standard bracketing: split off the longest proper Lyndon suffix.
pub fn bracket(w: &[usize], label: &dyn Fn(usize) -> String) -> String {
    if w.len() == 1 {
        return label(w[0]);
    }
    let split = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("a single letter is Lyndon");
    format!(
        "[{},{}]",
        bracket(&w[..split], label),
        bracket(&w[split..], label)
    )
}

/// Every Lyndon sequence whose prefixes all satisfy `fits`.
pub fn lyndon_sequences(
    q: usize,
    max_len: usize,
    fits: &dyn Fn(&[usize]) -> bool,
) -> Vec<Vec<usize>> {
    fn rec(
        q: usize,
        max_len: usize,
        fits: &dyn Fn(&[usize]) -> bool,
        w: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !w.is_empty() && is_lyndon(w) {
            out.push(w.clone());
        }
        if w.len() == max_len {
            return;
        }
        for c in 0..q {
            w.push(c);
            if fits(w) {
                rec(q, max_len, fits, w, out);
            }
            w.pop();
        }
    }
    let mut out = Vec::new();
    rec(q, max_len, fits, &mut Vec::new(), &mut out);
    out
}

fn total_degree(letters: &[Letter], m: u32, w: &[usize]) -> Vec<u32> {
    let mut a = vec![0; m as usize];
    for &c in w {
        for (x, y) in a.iter_mut().zip(letters[c].multidegree(m)) {
            *x += y;
        }
    }
    a
}

pub fn kappa_multi(n: &[u32], a: &[u32]) -> u32 {
    n.iter()
        .zip(a)
        .filter(|(_, &x)| x > 0)
        .map(|(&y, &x)| y / x)
        .min()
        .unwrap()
}

fn finish(
    letters: &[Letter],
    m: u32,
    words: Vec<Vec<usize>>,
    kappa: impl Fn(&[u32], usize) -> u32,
) -> Vec<OracleFactor> {
    let mut rows: Vec<(u32, usize, Vec<usize>, OracleFactor)> = words
        .into_iter()
        .filter_map(|w| {
            let a = total_degree(letters, m, &w);
            let kappa = kappa(&a, w.len());
            (kappa >= 1).then(|| {
                let word = bracket(&w, &|c| letters[c].label());
                (a.iter().sum(), w.len(), w, OracleFactor { word, a, kappa })
            })
        })
        .collect();
    rows.sort_by(|x, y| (x.0, x.1, &x.2).cmp(&(y.0, y.1, &y.2)));
    rows.into_iter().map(|r| r.3).collect()
}

fn within<'a>(letters: &'a [Letter], m: u32, bound: &[u32]) -> impl Fn(&[usize]) -> bool + 'a {
    let bound = bound.to_vec();
    move |w: &[usize]| {
        total_degree(letters, m, w)
            .iter()
            .zip(&bound)
            .all(|(a, n)| a <= n)
    }
}

pub fn multi(k: &SimplicialComplex, n: &[u32]) -> Vec<OracleFactor> {
    let m = k.m();
    let letters = alpha_letters(k, n, false);
    let fits = within(&letters, m, n);
    let max_len = n.iter().sum::<u32>() as usize;
    let words = lyndon_sequences(letters.len(), max_len, &fits);
    finish(&letters, m, words, |a, _| kappa_multi(n, a))
}

pub fn single(k: &SimplicialComplex, n: u32) -> Vec<OracleFactor> {
    let m = k.m();
    let letters = alpha_letters(k, &vec![n; m as usize], false);
    let fits = |w: &[usize]| total_degree(&letters, m, w).iter().sum::<u32>() <= n;
    let words = lyndon_sequences(letters.len(), n as usize, &fits);
    finish(&letters, m, words, |a, _| n / a.iter().sum::<u32>())
}

pub fn cone(k: &SimplicialComplex, n: &[u32]) -> Vec<OracleFactor> {
    let m = k.m();
    let letters = beta_letters(k, false);
    let fits = within(&letters, m, n);
    let words = lyndon_sequences(letters.len(), n.iter().sum::<u32>() as usize, &fits);
    finish(&letters, m, words, |a, _| kappa_multi(n, a))
}

pub fn bh(k: &SimplicialComplex, n: u32) -> Vec<OracleFactor> {
    let m = k.m();
    let letters = beta_letters(k, false);
    let words = lyndon_sequences(letters.len(), n as usize, &|_| true);
    finish(&letters, m, words, |_, len| n / len as u32)
}

pub fn from_library(list: &polytower::tower::FactorList) -> Vec<OracleFactor> {
    list.factors
        .iter()
        .map(|f| OracleFactor {
            word: f.labelled_word(),
            a: f.powers().to_vec(),
            kappa: f.kappa(),
        })
        .collect()
}

/// Number of Lyndon words of each length `1..=max_len` on `q` letters.
pub fn necklace_counts(q: usize, max_len: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_len + 1];
    for w in lyndon_sequences(q, max_len, &|_| true) {
        counts[w.len()] += 1;
    }
    counts
}

pub fn two_points() -> SimplicialComplex {
    SimplicialComplex::from_facets(2, Vec::<Vec<u32>>::new()).unwrap()
}

pub fn discrete(m: u32) -> SimplicialComplex {
    SimplicialComplex::from_facets(m, Vec::<Vec<u32>>::new()).unwrap()
}

pub fn boundary_triangle() -> SimplicialComplex {
    SimplicialComplex::from_facets(3, [[1, 2], [1, 3], [2, 3]]).unwrap()
}
