use rayon::prelude::*;
use thiserror::Error;

use super::graded::{GradedAbelianGroup, Summand};
use super::snf::{smith_form, SmithForm, SparseMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainComplexError {
    #[error("boundary out of degree {degree} is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        degree: i64,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("boundary composition out of degree {0} is nonzero")]
    NotAComplex(i64),
    #[error("basis labels for degree {0} do not match the basis size")]
    Labels(i64),
}

/// A bounded chain complex of free abelian groups
/// `C_lo <- C_{lo+1} <- ... <- C_hi`.
///
/// `boundaries[j]` is the map out of degree `lowest + j`; the map out of the
/// lowest degree is always zero.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    lowest: i64,
    labels: Vec<Vec<String>>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// `boundaries[j]` maps degree `lowest + j + 1` to `lowest + j`.
    pub fn new(
        lowest: i64,
        labels: Vec<Vec<String>>,
        boundaries: Vec<SparseMatrix>,
    ) -> Result<Self, ChainComplexError> {
        let sizes: Vec<usize> = labels.iter().map(Vec::len).collect();
        if boundaries.len() + 1 != sizes.len().max(1) {
            return Err(ChainComplexError::Labels(lowest + boundaries.len() as i64));
        }
        let mut all = vec![SparseMatrix::zeros(0, sizes.first().copied().unwrap_or(0))];
        for (j, b) in boundaries.into_iter().enumerate() {
            let degree = lowest + j as i64 + 1;
            if b.rows() != sizes[j] || b.cols() != sizes[j + 1] {
                return Err(ChainComplexError::Shape {
                    degree,
                    rows: b.rows(),
                    cols: b.cols(),
                    expected_rows: sizes[j],
                    expected_cols: sizes[j + 1],
                });
            }
            all.push(b);
        }
        for j in 1..all.len().saturating_sub(1) {
            let comp = all[j].mul(&all[j + 1]).expect("shapes checked above");
            if comp.iter().any(|c| !c.is_empty()) {
                return Err(ChainComplexError::NotAComplex(lowest + j as i64 + 1));
            }
        }
        Ok(ChainComplex {
            lowest,
            labels,
            boundaries: all,
        })
    }

    pub fn lowest_degree(&self) -> i64 {
        self.lowest
    }

    pub fn basis_size(&self, degree: i64) -> usize {
        self.index(degree).map_or(0, |j| self.labels[j].len())
    }

    pub fn labels(&self, degree: i64) -> &[String] {
        self.index(degree).map_or(&[], |j| &self.labels[j])
    }

    /// The map out of `degree`.
    pub fn boundary(&self, degree: i64) -> Option<&SparseMatrix> {
        self.index(degree).map(|j| &self.boundaries[j])
    }

    fn index(&self, degree: i64) -> Option<usize> {
        let j = degree - self.lowest;
        (j >= 0 && (j as usize) < self.labels.len()).then_some(j as usize)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.labels.len()).map(|j| self.lowest + j as i64)
    }

    /// Alternating sum of basis sizes.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|d| {
                let n = self.basis_size(d) as i64;
                if d.rem_euclid(2) == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Homology in every degree, including negative ones.
    ///
    /// Smith forms of the boundary maps are independent and computed in
    /// parallel; the result does not depend on scheduling.
    pub fn homology_by_degree(&self) -> Vec<(i64, Summand)> {
        let forms: Vec<SmithForm> = self.boundaries.par_iter().map(smith_form).collect();
        (0..self.labels.len())
            .map(|j| {
                let n = self.labels[j].len();
                let out_rank = forms[j].rank;
                let (in_rank, torsion) = match forms.get(j + 1) {
                    Some(f) => (f.rank, f.torsion.clone()),
                    None => (0, Vec::new()),
                };
                let free = (n - out_rank - in_rank) as u64;
                (self.lowest + j as i64, Summand::new(free, torsion))
            })
            .collect()
    }

    /// Homology in non-negative degrees as a graded group.
    ///
    /// Panics if a negative degree carries homology; augmented complexes of
    /// nonempty spaces never do.
    pub fn homology(&self) -> GradedAbelianGroup {
        let mut g = GradedAbelianGroup::zero();
        for (d, s) in self.homology_by_degree() {
            if s.is_zero() {
                continue;
            }
            assert!(d >= 0, "homology in negative degree {d}");
            g.insert(d as u32, s);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(sizes: &[usize]) -> Vec<Vec<String>> {
        sizes
            .iter()
            .map(|&n| (0..n).map(|i| i.to_string()).collect())
            .collect()
    }

    #[test]
    fn rejects_nonzero_composition() {
        // Z <-1- Z <-1- Z is not a complex.
        let one = SparseMatrix::from_columns(1, vec![vec![(0, 1)]]);
        let err = ChainComplex::new(0, labels(&[1, 1, 1]), vec![one.clone(), one]).unwrap_err();
        assert_eq!(err, ChainComplexError::NotAComplex(2));
    }

    #[test]
    fn rejects_bad_shape() {
        let m = SparseMatrix::zeros(2, 1);
        assert!(matches!(
            ChainComplex::new(0, labels(&[1, 1]), vec![m]),
            Err(ChainComplexError::Shape { .. })
        ));
    }

    #[test]
    fn multiplication_by_two() {
        // Z <-2- Z: H_0 = Z/2.
        let two = SparseMatrix::from_columns(1, vec![vec![(0, 2)]]);
        let c = ChainComplex::new(0, labels(&[1, 1]), vec![two]).unwrap();
        let h = c.homology();
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.torsion(0), &[2u32.into()]);
        assert_eq!(c.euler_characteristic(), 0);
    }
}
