//! Hall bases of free Lie algebras, realised as Lyndon words with their
//! standard bracketing.
//!
//! Letters are indices into an ordered [`Alphabet`]; the order on indices
//! is the order on letters. Lyndon words on a subset of an ordered alphabet
//! are exactly the Lyndon words of the whole alphabet that avoid the other
//! letters, so bases computed on finite pieces of a countable alphabet are
//! mutually compatible.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("{0:?} is not a Lyndon word")]
    NotLyndon(Vec<usize>),
    #[error("letter {0} has zero multidegree")]
    ZeroMultidegree(String),
    #[error("letters have multidegrees of different lengths")]
    RaggedMultidegrees,
    #[error("duplicate letter label {0}")]
    DuplicateLabel(String),
}

/// A generator of the free Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub label: String,
    pub multidegree: Vec<u32>,
    /// Connectivity of the space this letter stands for (0 = connected).
    pub connectivity: u32,
}

/// An ordered, multigraded, finite generator alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn new(letters: Vec<Letter>) -> Result<Self, LieError> {
        let width = letters.first().map_or(0, |l| l.multidegree.len());
        let mut seen = std::collections::HashSet::new();
        for l in &letters {
            if l.multidegree.len() != width {
                return Err(LieError::RaggedMultidegrees);
            }
            if l.multidegree.iter().all(|&x| x == 0) {
                return Err(LieError::ZeroMultidegree(l.label.clone()));
            }
            if !seen.insert(l.label.as_str()) {
                return Err(LieError::DuplicateLabel(l.label.clone()));
            }
        }
        Ok(Alphabet { letters })
    }

    /// `q` letters `a < b < c < ...`, letter `i` in multidegree `e_i`.
    pub fn standard(q: usize) -> Self {
        let letters = (0..q)
            .map(|i| {
                let mut multidegree = vec![0; q];
                multidegree[i] = 1;
                Letter {
                    label: standard_label(i),
                    multidegree,
                    connectivity: 0,
                }
            })
            .collect();
        Alphabet { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, i: usize) -> &Letter {
        &self.letters[i]
    }

    pub fn grading_width(&self) -> usize {
        self.letters.first().map_or(0, |l| l.multidegree.len())
    }

    /// Sum of letter multidegrees along `word`.
    pub fn multidegree(&self, word: &[usize]) -> Vec<u32> {
        let mut out = vec![0; self.grading_width()];
        for &c in word {
            for (o, x) in out.iter_mut().zip(&self.letters[c].multidegree) {
                *o += x;
            }
        }
        out
    }
}

fn standard_label(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// Is `w` strictly smaller than each of its proper rotations?
pub fn is_lyndon(w: &[usize]) -> bool {
    if w.is_empty() {
        return false;
    }
    // Duval: the first Lyndon factor of w covers all of w.
    let n = w.len();
    let (mut i, mut j) = (0, 1);
    while j < n {
        match w[i].cmp(&w[j]) {
            std::cmp::Ordering::Less => {
                i = 0;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Greater => return false,
        }
    }
    i == 0
}

/// A nonempty word strictly smaller than all of its proper rotations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord(Vec<usize>);

impl LyndonWord {
    pub fn new(letters: Vec<usize>) -> Result<Self, LieError> {
        if is_lyndon(&letters) {
            Ok(LyndonWord(letters))
        } else {
            Err(LieError::NotLyndon(letters))
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }
}

/// A Lie monomial: a letter or a bracket of two monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracket {
    Letter(usize),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    /// The underlying word, brackets erased.
    pub fn flatten(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.flatten_into(&mut out);
        out
    }

    fn flatten_into(&self, out: &mut Vec<usize>) {
        match self {
            Bracket::Letter(c) => out.push(*c),
            Bracket::Pair(u, v) => {
                u.flatten_into(out);
                v.flatten_into(out);
            }
        }
    }

    pub fn render_with<F: Fn(usize) -> String + Copy>(&self, label: F) -> String {
        match self {
            Bracket::Letter(c) => label(*c),
            Bracket::Pair(u, v) => format!("[{},{}]", u.render_with(label), v.render_with(label)),
        }
    }

    /// Expansion as a noncommutative polynomial, `[u,v] = uv - vu`.
    pub fn expand(&self) -> BTreeMap<Vec<usize>, i64> {
        match self {
            Bracket::Letter(c) => BTreeMap::from([(vec![*c], 1)]),
            Bracket::Pair(u, v) => {
                let (pu, pv) = (u.expand(), v.expand());
                let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                for (a, x) in &pu {
                    for (b, y) in &pv {
                        let mut ab = a.clone();
                        ab.extend(b);
                        *out.entry(ab).or_default() += x * y;
                        let mut ba = b.clone();
                        ba.extend(a);
                        *out.entry(ba).or_default() -= x * y;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }

    fn relabel(&self, map: &impl Fn(usize) -> usize) -> Bracket {
        match self {
            Bracket::Letter(c) => Bracket::Letter(map(*c)),
            Bracket::Pair(u, v) => {
                Bracket::Pair(Box::new(u.relabel(map)), Box::new(v.relabel(map)))
            }
        }
    }
}

/// A Hall basis element: a Lyndon word with its standard bracketing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HallWord {
    word: LyndonWord,
    bracket: Bracket,
}

impl HallWord {
    pub fn word(&self) -> &LyndonWord {
        &self.word
    }

    pub fn letters(&self) -> &[usize] {
        self.word.letters()
    }

    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    /// `|ω|`, the number of letters counted with multiplicity.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `c_ω`: how often each letter occurs.
    pub fn letter_counts(&self) -> BTreeMap<usize, u32> {
        let mut out = BTreeMap::new();
        for &c in self.letters() {
            *out.entry(c).or_default() += 1;
        }
        out
    }

    /// Distinct letters in increasing order.
    pub fn distinct_letters(&self) -> Vec<usize> {
        self.letter_counts().into_keys().collect()
    }

    pub fn multidegree(&self, alphabet: &Alphabet) -> Vec<u32> {
        alphabet.multidegree(self.letters())
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.bracket
            .render_with(|c| alphabet.letter(c).label.clone())
    }

    /// Applies an order-preserving relabelling of letters; Lyndon words and
    /// standard factorisations are invariant under such maps.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> HallWord {
        let letters: Vec<usize> = self.letters().iter().map(|&c| map(c)).collect();
        debug_assert!(is_lyndon(&letters), "relabelling must preserve order");
        HallWord {
            word: LyndonWord(letters),
            bracket: self.bracket.relabel(&map),
        }
    }
}

impl fmt::Display for HallWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket.render_with(standard_label))
    }
}

/// Standard bracketing: `w = uv` with `v` the longest proper Lyndon suffix,
/// bracketed as `[b(u), b(v)]`.
pub fn standard_bracketing(word: &LyndonWord) -> HallWord {
    HallWord {
        bracket: bracket_of(word.letters()),
        word: word.clone(),
    }
}

/// Checks the input before bracketing it.
pub fn try_standard_bracketing(letters: &[usize]) -> Result<HallWord, LieError> {
    LyndonWord::new(letters.to_vec()).map(|w| standard_bracketing(&w))
}

fn bracket_of(w: &[usize]) -> Bracket {
    if w.len() == 1 {
        return Bracket::Letter(w[0]);
    }
    let split = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("a Lyndon word of length >= 2 has a proper Lyndon suffix");
    Bracket::Pair(
        Box::new(bracket_of(&w[..split])),
        Box::new(bracket_of(&w[split..])),
    )
}

/// Admission control for the Lyndon search: `try_push` either accepts the
/// letter (updating its state) or rejects it without changes.
///
/// Budgets must be monotone: a letter rejected after some prefix stays
/// rejected after every extension of that prefix. The search relies on this
/// to stop offering rejected letters deeper in the tree.
pub trait WordBudget {
    fn try_push(&mut self, letter: usize) -> bool;
    fn pop(&mut self, letter: usize);
}

/// Accepts everything.
pub struct Unbounded;

impl WordBudget for Unbounded {
    fn try_push(&mut self, _: usize) -> bool {
        true
    }

    fn pop(&mut self, _: usize) {}
}

/// Caps on how often each letter may occur.
pub struct MultiplicityCaps {
    caps: Vec<u32>,
    used: Vec<u32>,
}

impl MultiplicityCaps {
    pub fn new(caps: Vec<u32>) -> Self {
        let used = vec![0; caps.len()];
        MultiplicityCaps { caps, used }
    }
}

impl WordBudget for MultiplicityCaps {
    fn try_push(&mut self, letter: usize) -> bool {
        if self.used[letter] < self.caps[letter] {
            self.used[letter] += 1;
            true
        } else {
            false
        }
    }

    fn pop(&mut self, letter: usize) {
        self.used[letter] -= 1;
    }
}

/// Visits every Lyndon word of length at most `max_len` over `q` letters
/// whose every prefix the budget admits, in lexicographic (prefix-first)
/// order. Stops early if `visit` breaks.
///
/// Generation walks prenecklaces: extending a prenecklace of period `p` by a
/// letter `c >= w[t-p]` keeps it a prenecklace, and it is Lyndon exactly
/// when `c > w[t-p]`. Each node carries the letters the budget still admits.
pub fn for_each_lyndon<B, F>(
    q: usize,
    max_len: usize,
    budget: &mut B,
    mut visit: F,
) -> ControlFlow<()>
where
    B: WordBudget + ?Sized,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if max_len == 0 {
        return ControlFlow::Continue(());
    }
    let roots = admissible(budget, 0..q);
    let mut word = Vec::with_capacity(max_len);
    for &c in &roots {
        let accepted = budget.try_push(c);
        debug_assert!(accepted);
        word.push(c);
        visit(&word)?;
        if max_len > 1 {
            let next = admissible(budget, roots.iter().copied().filter(|&d| d >= c));
            extend(max_len, &mut word, 1, budget, &next, &mut visit)?;
        }
        word.pop();
        budget.pop(c);
    }
    ControlFlow::Continue(())
}

fn admissible<B: WordBudget + ?Sized>(
    budget: &mut B,
    letters: impl Iterator<Item = usize>,
) -> Vec<usize> {
    letters
        .filter(|&d| {
            let ok = budget.try_push(d);
            if ok {
                budget.pop(d);
            }
            ok
        })
        .collect()
}

/// `candidates` are the letters admissible after `word`, ascending, all at
/// least `word[0]`.
fn extend<B, F>(
    max_len: usize,
    word: &mut Vec<usize>,
    period: usize,
    budget: &mut B,
    candidates: &[usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    B: WordBudget + ?Sized,
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let t = word.len();
    let floor = word[t - period];
    let from = candidates.partition_point(|&c| c < floor);
    for &c in &candidates[from..] {
        let accepted = budget.try_push(c);
        debug_assert!(accepted);
        word.push(c);
        let p = if c == floor { period } else { t + 1 };
        if p == t + 1 {
            visit(word)?;
        }
        if t + 1 < max_len {
            let next = admissible(budget, candidates.iter().copied());
            if !next.is_empty() {
                extend(max_len, word, p, budget, &next, visit)?;
            }
        }
        word.pop();
        budget.pop(c);
    }
    ControlFlow::Continue(())
}

fn sort_length_lex(words: &mut [LyndonWord]) {
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// All Lyndon words of length `<= max_length`, ordered by length and then
/// lexicographically.
pub fn lyndon_words(alphabet: &Alphabet, max_length: usize) -> Vec<LyndonWord> {
    let mut out = Vec::new();
    let _ = for_each_lyndon(alphabet.len(), max_length, &mut Unbounded, |w| {
        out.push(LyndonWord(w.to_vec()));
        ControlFlow::Continue(())
    });
    sort_length_lex(&mut out);
    out
}

/// Hall words in which letter `i` occurs at most `caps[i]` times, ordered by
/// length and then lexicographically.
pub fn bounded_words(alphabet: &Alphabet, caps: &[u32]) -> Vec<HallWord> {
    assert_eq!(caps.len(), alphabet.len(), "one cap per letter");
    let max_len = caps.iter().map(|&c| c as usize).sum();
    let mut budget = MultiplicityCaps::new(caps.to_vec());
    let mut out = Vec::new();
    let _ = for_each_lyndon(alphabet.len(), max_len, &mut budget, |w| {
        out.push(LyndonWord(w.to_vec()));
        ControlFlow::Continue(())
    });
    sort_length_lex(&mut out);
    out.iter().map(standard_bracketing).collect()
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Number of Lyndon words of length `n` on `q` letters:
/// `(1/n) Σ_{d|n} μ(d) q^{n/d}`.
pub fn witt_count(q: u64, n: u32) -> BigUint {
    assert!(q >= 1 && n >= 1);
    let total: BigInt = divisors(n as u64)
        .into_iter()
        .map(|d| {
            BigInt::from(mobius(d)) * num_traits::pow(BigInt::from(q), (n as u64 / d) as usize)
        })
        .sum();
    let (quot, rem) = total.div_rem(&BigInt::from(n));
    debug_assert!(rem.is_zero());
    quot.to_biguint().expect("Witt numbers are non-negative")
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Number of Lyndon words with letter multiplicities `counts`:
/// `(1/n) Σ_{g | gcd} μ(g) (n/g)! / Π (c_i/g)!` with `n = Σ c_i`.
pub fn multigraded_witt(counts: &[u32]) -> BigUint {
    let n: u64 = counts.iter().map(|&c| c as u64).sum();
    if n == 0 {
        return BigUint::zero();
    }
    let g = counts.iter().fold(0u64, |acc, &c| acc.gcd(&(c as u64)));
    let total: BigInt = divisors(g)
        .into_iter()
        .map(|d| {
            let denom = counts
                .iter()
                .fold(BigInt::one(), |acc, &c| acc * factorial(c as u64 / d));
            BigInt::from(mobius(d)) * (factorial(n / d) / denom)
        })
        .sum();
    let (quot, rem) = total.div_rem(&BigInt::from(n));
    debug_assert!(rem.is_zero() && !quot.is_negative());
    quot.to_biguint().expect("non-negative")
}

/// Convenience for callers that know the count fits in a machine word.
pub fn witt_count_u64(q: u64, n: u32) -> Option<u64> {
    witt_count(q, n).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: every word of length <= n, kept if smaller than all
    /// proper rotations.
    fn brute_lyndon(q: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for len in 1..=n {
            let total = q.pow(len as u32);
            for code in 0..total {
                let mut w = Vec::with_capacity(len);
                let mut x = code;
                for _ in 0..len {
                    w.push(x % q);
                    x /= q;
                }
                w.reverse();
                let lyndon = (1..len).all(|r| {
                    let rot: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
                    w < rot
                });
                if lyndon {
                    out.push(w);
                }
            }
        }
        out
    }

    fn words(ws: &[LyndonWord]) -> Vec<String> {
        ws.iter()
            .map(|w| w.letters().iter().map(|&c| standard_label(c)).collect())
            .collect()
    }

    #[test]
    fn single_letter() {
        assert_eq!(words(&lyndon_words(&Alphabet::standard(1), 6)), vec!["a"]);
    }

    #[test]
    fn two_letters_up_to_three() {
        assert_eq!(
            words(&lyndon_words(&Alphabet::standard(2), 3)),
            vec!["a", "b", "ab", "aab", "abb"]
        );
    }

    #[test]
    fn matches_rotation_brute_force() {
        for q in 1..=3 {
            let mut expected = brute_lyndon(q, 6);
            expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            let got: Vec<Vec<usize>> = lyndon_words(&Alphabet::standard(q), 6)
                .into_iter()
                .map(LyndonWord::into_letters)
                .collect();
            assert_eq!(got, expected, "q = {q}");
        }
    }

    #[test]
    fn two_letter_counts_by_length() {
        let ws = lyndon_words(&Alphabet::standard(2), 5);
        let counts: Vec<usize> = (1..=5)
            .map(|n| ws.iter().filter(|w| w.len() == n).count())
            .collect();
        assert_eq!(counts, vec![2, 1, 2, 3, 6]);
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt_count(2, 1), 2u32.into());
        assert_eq!(witt_count(2, 2), 1u32.into());
        assert_eq!(witt_count(3, 4), 18u32.into());
        let q2: Vec<u64> = (1..=8).map(|n| witt_count_u64(2, n).unwrap()).collect();
        assert_eq!(q2, vec![2, 1, 2, 3, 6, 9, 18, 30]);
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn standard_bracketings() {
        let b = |w: &[usize]| try_standard_bracketing(w).unwrap().to_string();
        assert_eq!(b(&[0, 1]), "[a,b]");
        assert_eq!(b(&[0, 0, 1]), "[a,[a,b]]");
        assert_eq!(b(&[0, 1, 1]), "[[a,b],b]");
        assert_eq!(b(&[0, 0, 1, 0, 1]), "[[a,[a,b]],[a,b]]");
        assert_eq!(
            try_standard_bracketing(&[1, 0]).unwrap_err(),
            LieError::NotLyndon(vec![1, 0])
        );
    }

    #[test]
    fn leading_monomial_is_the_word() {
        for w in lyndon_words(&Alphabet::standard(3), 4) {
            let h = standard_bracketing(&w);
            let poly = h.bracket().expand();
            let (lead, coeff) = poly.iter().next().unwrap();
            assert_eq!(lead.as_slice(), w.letters(), "{h}");
            assert_eq!(*coeff, 1);
            assert_eq!(h.bracket().flatten(), w.letters());
        }
    }

    #[test]
    fn bounded_examples() {
        let ab = Alphabet::standard(2);
        let render = |ws: Vec<HallWord>| ws.iter().map(|w| w.render(&ab)).collect::<Vec<_>>();
        assert_eq!(render(bounded_words(&ab, &[1, 0])), vec!["a"]);
        assert_eq!(render(bounded_words(&ab, &[1, 1])), vec!["a", "b", "[a,b]"]);
        assert_eq!(
            render(bounded_words(&ab, &[2, 1])),
            vec!["a", "b", "[a,b]", "[a,[a,b]]"]
        );
    }

    #[test]
    fn alphabet_validation() {
        let bad = Letter {
            label: "z".into(),
            multidegree: vec![0, 0],
            connectivity: 0,
        };
        assert_eq!(
            Alphabet::new(vec![bad]).unwrap_err(),
            LieError::ZeroMultidegree("z".into())
        );
        let a = Letter {
            label: "a".into(),
            multidegree: vec![1],
            connectivity: 0,
        };
        assert_eq!(
            Alphabet::new(vec![a.clone(), a]).unwrap_err(),
            LieError::DuplicateLabel("a".into())
        );
    }
}
