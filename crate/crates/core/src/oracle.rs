//! Exhaustive reference enumeration.
//!
//! A plain depth-first walk over start positions and gap choices. It shares no
//! code with the matrix or recurrence engines and is exponential in `n`; use it
//! for small words only.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::word::{GapSet, IndexSelection, Word};

fn walk(n: usize, m: &GapSet, path: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    visit(path);
    let last = *path.last().expect("walk starts from a position");
    for gap in m.iter() {
        let next = last + gap;
        if next > n {
            break;
        }
        path.push(next);
        walk(n, m, path, visit);
        path.pop();
    }
}

fn for_each_selection(n: usize, m: &GapSet, mut visit: impl FnMut(&[usize])) {
    let mut path = Vec::with_capacity(n);
    for start in 1..=n {
        path.push(start);
        walk(n, m, &mut path, &mut visit);
        path.pop();
    }
}

/// Every valid index selection of `w` under `m`, in depth-first order.
pub fn oracle_selections<T>(w: &Word<T>, m: &GapSet) -> Vec<IndexSelection> {
    let mut out = Vec::new();
    for_each_selection(w.len(), m, |path| {
        out.push(IndexSelection::new(path.to_vec(), w.len(), m).expect("walk yields valid selections"));
    });
    out
}

/// The distinct M-subwords of `w` (all lengths `>= 1`).
pub fn oracle_enumerate<T: Ord + Clone>(w: &Word<T>, m: &GapSet) -> BTreeSet<Vec<T>> {
    let mut out = BTreeSet::new();
    for_each_selection(w.len(), m, |path| {
        out.insert(path.iter().map(|&i| w.at(i).clone()).collect());
    });
    out
}

/// Number of valid index selections (occurrences, not distinct strings).
pub fn oracle_count_selections<T>(w: &Word<T>, m: &GapSet) -> u64 {
    let mut count = 0u64;
    for_each_selection(w.len(), m, |_| count += 1);
    count
}
