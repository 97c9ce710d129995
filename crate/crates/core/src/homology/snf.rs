//! Smith normal form over the integers, diagonal only.
//!
//! Entries are arbitrary-precision: the elimination below can grow
//! intermediate values well past 64 bits on moderately sized boundary
//! matrices.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix stored by columns as `(row, coefficient)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from columns; entries within a column are merged and
    /// sorted by row, zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by_key(|&(r, _)| r);
                let mut merged: Vec<(usize, i64)> = Vec::with_capacity(c.len());
                for (r, x) in c {
                    assert!(r < rows, "row index {r} out of bounds ({rows} rows)");
                    match merged.last_mut() {
                        Some((lr, lx)) if *lr == r => *lx += x,
                        _ => merged.push((r, x)),
                    }
                }
                merged.retain(|&(_, x)| x != 0);
                merged
            })
            .collect();
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// `self * rhs`, with `i128` accumulation.
    pub fn mul(&self, rhs: &SparseMatrix) -> Option<Vec<Vec<(usize, i128)>>> {
        if self.cols != rhs.rows {
            return None;
        }
        let out = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc = vec![0i128; self.rows];
                for &(k, y) in col {
                    for &(i, x) in &self.columns[k] {
                        acc[i] += x as i128 * y as i128;
                    }
                }
                acc.into_iter()
                    .enumerate()
                    .filter(|&(_, v)| v != 0)
                    .collect()
            })
            .collect();
        Some(out)
    }

    fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                dense[i][j] = BigInt::from(x);
            }
        }
        dense
    }
}

/// Diagonal data of a Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SmithForm {
    pub rank: usize,
    /// Invariant factors greater than one, ascending, each dividing the next.
    pub torsion: Vec<BigUint>,
}

/// Computes the rank and the nontrivial invariant factors of `m`.
pub fn smith_form(m: &SparseMatrix) -> SmithForm {
    if m.is_zero() {
        return SmithForm::default();
    }
    let mut a = m.to_dense();
    let rows = m.rows;
    let cols = m.cols;
    let mut diag: Vec<BigInt> = Vec::new();

    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(&a, t, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pr);
        swap_cols(&mut a, t, pc);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    let (top, rest) = a.split_at_mut(i);
                    axpy_row(&mut rest[0], &top[t], &q, t);
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        if !row[t].is_zero() {
                            let delta = &q * &row[t];
                            row[j] -= delta;
                        }
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                // A strictly smaller remainder sits in row or column t.
                let (pr, pc) = min_abs_in_cross(&a, t);
                a.swap(t, pr);
                swap_cols(&mut a, t, pc);
                continue;
            }
            // The pivot must divide the remaining block; if not, fold the
            // offending row in and go again.
            let pivot = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| {
                a[i][t + 1..]
                    .iter()
                    .any(|x| !x.is_zero() && !x.is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    let (src, dst) = (&rest[0], &mut top[t]);
                    for j in t..cols {
                        if !src[j].is_zero() {
                            dst[j] += &src[j];
                        }
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }

    let rank = diag.len();
    let torsion = diag
        .into_iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_biguint().expect("absolute value is non-negative"))
        .collect::<Vec<_>>();
    SmithForm {
        rank,
        torsion: canonical_invariant_factors(torsion),
    }
}

/// Rewrites a list of cyclic orders as invariant factors: drops ones and
/// repeatedly replaces pairs by `(gcd, lcm)` until each divides the next.
pub fn canonical_invariant_factors(mut t: Vec<BigUint>) -> Vec<BigUint> {
    t.retain(|x| !x.is_one());
    assert!(
        t.iter().all(|x| !x.is_zero()),
        "zero is not a torsion order"
    );
    t.sort();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if (&t[j] % &t[i]).is_zero() {
                continue;
            }
            let g = t[i].gcd(&t[j]);
            let l = t[i].lcm(&t[j]);
            t[i] = g;
            t[j] = l;
        }
    }
    t.retain(|x| !x.is_one());
    t.sort();
    t
}

fn axpy_row(dst: &mut [BigInt], src: &[BigInt], q: &BigInt, from: usize) {
    for j in from..dst.len() {
        if !src[j].is_zero() {
            let delta = q * &src[j];
            dst[j] -= delta;
        }
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &a[i][j];
            if x.sign() == Sign::NoSign {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => x.magnitude() < a[bi][bj].magnitude(),
            };
            if better {
                best = Some((i, j));
                if x.magnitude().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t + 1..a.len() {
        if !a[i][t].is_zero()
            && (a[best.0][best.1].is_zero() || a[i][t].magnitude() < a[best.0][best.1].magnitude())
        {
            best = (i, t);
        }
    }
    for j in t + 1..a[t].len() {
        if !a[t][j].is_zero()
            && (a[best.0][best.1].is_zero() || a[t][j].magnitude() < a[best.0][best.1].magnitude())
        {
            best = (t, j);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let cols = (0..c)
            .map(|j| (0..r).map(|i| (i, rows[i][j])).collect())
            .collect();
        SparseMatrix::from_columns(r, cols)
    }

    fn big(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn diagonal_needs_reordering() {
        // diag(2, 3) has invariant factors (1, 6).
        let f = smith_form(&dense(&[&[2, 0], &[0, 3]]));
        assert_eq!(f.rank, 2);
        assert_eq!(f.torsion, big(&[6]));
    }

    #[test]
    fn textbook_example() {
        let f = smith_form(&dense(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(f.rank, 3);
        assert_eq!(f.torsion, big(&[2, 6, 12]));
    }

    #[test]
    fn rank_deficient() {
        let f = smith_form(&dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]));
        assert_eq!(f.rank, 2);
        assert!(f.torsion.is_empty());
        assert_eq!(smith_form(&SparseMatrix::zeros(3, 4)), SmithForm::default());
    }

    #[test]
    fn invariant_factor_canonicalisation() {
        assert_eq!(
            canonical_invariant_factors(big(&[4, 2, 1, 6])),
            big(&[2, 2, 12])
        );
        assert_eq!(canonical_invariant_factors(big(&[3, 5])), big(&[15]));
        assert_eq!(canonical_invariant_factors(big(&[1, 1])), big(&[]));
    }

    #[test]
    fn product_agrees_with_manual() {
        let a = dense(&[&[1, -1], &[0, 1]]);
        let b = dense(&[&[1], &[1]]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p, vec![vec![(1, 1)]]);
        assert!(b.mul(&b).is_none());
    }
}
