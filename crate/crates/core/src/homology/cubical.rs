//! Cubical subcomplexes of `[0,1]^m` and the real moment-angle complex.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use super::chain::ChainComplex;
use super::graded::GradedAbelianGroup;
use super::snf::SparseMatrix;
use crate::simplicial::{Simplex, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicalError {
    #[error("cell {0} is not a word in {{0,1,*}}^{1}")]
    BadCell(String, u32),
    #[error("cell {cell} is missing its face {face}")]
    NotFaceClosed { cell: String, face: String },
}

/// A cell of the `m`-cube: a word in `{0, 1, *}^m`.
///
/// `free` marks the `*` coordinates, `ones` the coordinates fixed at 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    free: u64,
    ones: u64,
}

impl Cell {
    pub fn new(free: u64, ones: u64) -> Self {
        assert_eq!(free & ones, 0, "a coordinate cannot be both free and fixed");
        Cell { free, ones }
    }

    /// Parses a word such as `"0*1"`.
    pub fn parse(word: &str) -> Option<Self> {
        let mut free = 0;
        let mut ones = 0;
        for (i, ch) in word.chars().enumerate() {
            if i >= 64 {
                return None;
            }
            match ch {
                '0' => {}
                '1' => ones |= 1 << i,
                '*' => free |= 1 << i,
                _ => return None,
            }
        }
        Some(Cell { free, ones })
    }

    pub fn dim(self) -> usize {
        self.free.count_ones() as usize
    }

    pub fn free(self) -> u64 {
        self.free
    }

    pub fn ones(self) -> u64 {
        self.ones
    }

    pub fn word(self, m: u32) -> String {
        (0..m)
            .map(|i| {
                if self.free >> i & 1 == 1 {
                    '*'
                } else if self.ones >> i & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// Signed codimension-one faces: for the `j`-th free coordinate `i`,
    /// `(-1)^j (cell[i := 1] - cell[i := 0])`.
    pub fn boundary(self) -> impl Iterator<Item = (Cell, i64)> {
        let free = self.free;
        let ones = self.ones;
        (0..64u32)
            .filter(move |&i| free >> i & 1 == 1)
            .enumerate()
            .flat_map(move |(j, i)| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let rest = free & !(1 << i);
                [
                    (
                        Cell {
                            free: rest,
                            ones: ones | 1 << i,
                        },
                        sign,
                    ),
                    (Cell { free: rest, ones }, -sign),
                ]
            })
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = 64 - (self.free | self.ones).leading_zeros();
        write!(f, "{}", self.word(width.max(1)))
    }
}

/// A face-closed set of cells of `[0,1]^m`.
#[derive(Debug, Clone)]
pub struct CubicalComplex {
    m: u32,
    /// Sorted by dimension, then by `(free, ones)`.
    cells: Vec<Cell>,
}

impl CubicalComplex {
    pub fn new<I: IntoIterator<Item = Cell>>(m: u32, cells: I) -> Result<Self, CubicalError> {
        let limit = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
        let set: HashSet<Cell> = cells.into_iter().collect();
        for &c in &set {
            if (c.free | c.ones) & !limit != 0 {
                return Err(CubicalError::BadCell(c.word(64), m));
            }
            for (face, _) in c.boundary() {
                if !set.contains(&face) {
                    return Err(CubicalError::NotFaceClosed {
                        cell: c.word(m),
                        face: face.word(m),
                    });
                }
            }
        }
        let mut cells: Vec<Cell> = set.into_iter().collect();
        cells.sort_unstable_by_key(|c| (c.dim(), c.free, c.ones));
        Ok(CubicalComplex { m, cells })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim())
    }

    pub fn count_by_dim(&self) -> Vec<usize> {
        let top = self.dim().map_or(0, |d| d + 1);
        let mut counts = vec![0; top];
        for c in &self.cells {
            counts[c.dim()] += 1;
        }
        counts
    }

    /// Cellular chain complex augmented by a single generator in degree -1.
    pub fn augmented_chain_complex(&self) -> ChainComplex {
        let top = self.dim().map_or(0, |d| d + 1);
        let mut by_dim: Vec<Vec<Cell>> = vec![Vec::new(); top];
        for &c in &self.cells {
            by_dim[c.dim()].push(c);
        }
        let index: Vec<HashMap<Cell, usize>> = by_dim
            .iter()
            .map(|cs| cs.iter().enumerate().map(|(i, &c)| (c, i)).collect())
            .collect();

        let mut labels = vec![vec!["()".to_string()]];
        labels.extend(
            by_dim
                .iter()
                .map(|cs| cs.iter().map(|c| c.word(self.m)).collect()),
        );

        let mut boundaries = Vec::with_capacity(top);
        if let Some(vertices) = by_dim.first() {
            boundaries.push(SparseMatrix::from_columns(
                1,
                vertices.iter().map(|_| vec![(0, 1)]).collect(),
            ));
        }
        for d in 1..top {
            let cols = by_dim[d]
                .iter()
                .map(|c| c.boundary().map(|(f, s)| (index[d - 1][&f], s)).collect())
                .collect();
            boundaries.push(SparseMatrix::from_columns(by_dim[d - 1].len(), cols));
        }
        ChainComplex::new(-1, labels, boundaries).expect("cubical boundary squares to zero")
    }
}

/// The real moment-angle complex `(D^1, S^0)^K` as a cubical subcomplex of
/// `[0,1]^m`: cells whose free coordinates form a face of `K`.
pub fn real_moment_angle_complex(k: &SimplicialComplex) -> CubicalComplex {
    let full = Simplex::full(k.m());
    let mut cells = Vec::new();
    for &sigma in k.faces() {
        let rest = Simplex::from_bits(full.bits() & !sigma.bits());
        for fixed in rest.subsets() {
            cells.push(Cell::new(sigma.bits(), fixed.bits()));
        }
    }
    CubicalComplex::new(k.m(), cells).expect("moment-angle cells are face closed")
}

/// Reduced integral homology of a cubical complex.
pub fn cubical_homology(c: &CubicalComplex) -> GradedAbelianGroup {
    c.augmented_chain_complex().homology()
}
