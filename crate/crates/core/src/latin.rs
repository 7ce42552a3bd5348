//! Witness enumeration with word-set matrices.
//!
//! Same sweep as [`warshall_paths`](crate::warshall_paths), but each cell
//! holds the set of subwords running from position `i` to position `j`, and
//! "multiply" concatenates a word ending at `k` with a word starting at `k`
//! whose first letter has been erased.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::word::{GapSet, Word};

/// Square matrix whose cells are sets of letter sequences. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSetMatrix<T> {
    order: usize,
    cells: Vec<BTreeSet<Vec<T>>>,
}

impl<T: Ord + Clone> WordSetMatrix<T> {
    pub fn empty(order: usize) -> Self {
        Self { order, cells: (0..order * order).map(|_| BTreeSet::new()).collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Words in cell `(i, j)`, lexicographically ordered.
    pub fn cell(&self, i: usize, j: usize) -> &BTreeSet<Vec<T>> {
        &self.cells[i * self.order + j]
    }

    fn cell_mut(&mut self, i: usize, j: usize) -> &mut BTreeSet<Vec<T>> {
        &mut self.cells[i * self.order + j]
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(BTreeSet::is_empty)
    }

    /// Cell sizes as a plain count grid.
    pub fn cardinalities(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|i| (0..self.order).map(|j| self.cell(i, j).len()).collect()).collect()
    }

    /// All cells in row-major order, duplicates across cells kept.
    pub fn words(&self) -> impl Iterator<Item = &Vec<T>> + '_ {
        self.cells.iter().flatten()
    }
}

/// Initial matrix: cell `(i, j)` is `{x_i x_j}` when `j - i ∈ M`, else empty.
pub fn init_latin<T: Ord + Clone>(w: &Word<T>, m: &GapSet) -> WordSetMatrix<T> {
    let n = w.len();
    let letters = w.letters();
    let mut out = WordSetMatrix::empty(n);
    for i in 0..n {
        for gap in m.iter().take_while(|&g| i + g < n) {
            let j = i + gap;
            out.cell_mut(i, j).insert(alloc::vec![letters[i].clone(), letters[j].clone()]);
        }
    }
    out
}

/// Runs the k-outer sweep: `W_ij ← W_ij ∪ W_ik · 'W_kj` whenever both are nonempty.
pub fn warshall_latin<T: Ord + Clone>(matrix: &WordSetMatrix<T>) -> WordSetMatrix<T> {
    let n = matrix.order();
    let mut w = matrix.clone();
    for k in 0..n {
        for i in 0..n {
            if w.cell(i, k).is_empty() {
                continue;
            }
            for j in 0..n {
                if w.cell(k, j).is_empty() {
                    continue;
                }
                let joined: Vec<Vec<T>> = w
                    .cell(i, k)
                    .iter()
                    .flat_map(|head| {
                        w.cell(k, j).iter().map(move |tail| {
                            let mut word = head.clone();
                            word.extend_from_slice(&tail[1..]);
                            word
                        })
                    })
                    .collect();
                w.cell_mut(i, j).extend(joined);
            }
        }
    }
    w
}

/// All M-subwords of length at least 2, sorted.
///
/// With `dedup` the same string reached from different cells is listed once;
/// this is needed for words with repeated letters. Rainbow words never
/// produce cross-cell duplicates.
pub fn nontrivial_subwords<T: Ord + Clone>(w: &Word<T>, m: &GapSet, dedup: bool) -> Vec<Vec<T>> {
    let fixpoint = warshall_latin(&init_latin(w, m));
    let mut words: Vec<Vec<T>> = fixpoint.words().cloned().collect();
    words.sort();
    if dedup {
        words.dedup();
    }
    words
}
