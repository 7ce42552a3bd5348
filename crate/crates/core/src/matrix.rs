//! Path counting in the gap digraph.
//!
//! For a word of length `n` and gap set `M`, the digraph has vertices
//! `1..=n` and an edge `i -> j` whenever `j - i ∈ M`. Each M-subword of length
//! `s >= 2` of a rainbow word is a directed path with `s - 1` edges, so
//! `K(n, M)` is the entry sum of `R = I + A + A^2 + …`.
//!
//! Indices in this module are 0-based.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::word::GapSet;
use crate::BigCount;

/// Square matrix of arbitrary-precision nonnegative integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    order: usize,
    entries: Vec<BigCount>,
}

impl CountMatrix {
    pub fn zeros(order: usize) -> Self {
        Self { order, entries: alloc::vec![BigCount::zero(); order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, BigCount::one());
        }
        m
    }

    /// Builds a matrix from rows of small integers. Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Self {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), order, "matrix rows must be square");
            entries.extend(row.iter().map(|&v| BigCount::from(v)));
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigCount {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigCount) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigCount] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigCount]> + '_ {
        (0..self.order).map(move |i| self.row(i))
    }

    /// Sum of all entries.
    pub fn sum(&self) -> BigCount {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// True when every entry on or below the main diagonal is zero.
    pub fn is_strictly_upper_triangular(&self) -> bool {
        (0..self.order).all(|i| (0..=i).all(|j| self.get(i, j).is_zero()))
    }
}

impl Add for &CountMatrix {
    type Output = CountMatrix;

    fn add(self, rhs: &CountMatrix) -> CountMatrix {
        assert_eq!(self.order, rhs.order);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        CountMatrix { order: self.order, entries }
    }
}

impl Mul for &CountMatrix {
    type Output = CountMatrix;

    fn mul(self, rhs: &CountMatrix) -> CountMatrix {
        assert_eq!(self.order, rhs.order);
        let n = self.order;
        let mut out = CountMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let r = rhs.get(k, j);
                    if !r.is_zero() {
                        out.entries[i * n + j] += lhs * r;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CountMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Adjacency matrix of the gap digraph: entry `(i, j)` is 1 iff `j - i ∈ M`.
pub fn build_adjacency(n: usize, m: &GapSet) -> CountMatrix {
    let mut a = CountMatrix::zeros(n);
    for i in 0..n {
        for gap in m.iter().take_while(|&g| i + g < n) {
            a.set(i, i + gap, BigCount::one());
        }
    }
    a
}

/// Number of directed paths with at least one edge between every pair of vertices.
///
/// `a` must be the adjacency matrix of a DAG whose edges all go from a lower
/// to a higher index (as produced by [`build_adjacency`]); the single sweep
/// relies on index order being a topological order.
pub fn warshall_paths(a: &CountMatrix) -> CountMatrix {
    let n = a.order();
    let mut w = a.clone();
    for k in 0..n {
        for i in 0..n {
            let via = w.get(i, k).clone();
            if via.is_zero() {
                continue;
            }
            for j in 0..n {
                let tail = w.get(k, j);
                if !tail.is_zero() {
                    let extra = &via * tail;
                    w.entries[i * n + j] += extra;
                }
            }
        }
    }
    w
}

/// `R = I + W`, paths of any length including the empty one.
pub fn reachability(a: &CountMatrix) -> CountMatrix {
    &CountMatrix::identity(a.order()) + &warshall_paths(a)
}

/// `K(n, M)`: the M-complexity of a rainbow word of length `n`.
pub fn m_complexity(n: usize, m: &GapSet) -> BigCount {
    reachability(&build_adjacency(n, m)).sum()
}
