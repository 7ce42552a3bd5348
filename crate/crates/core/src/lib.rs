//! Scattered-subword complexity of words.
//!
//! An *M-subword* of a word `x_1 x_2 … x_n` is a word `x_{i_1} … x_{i_s}` whose
//! consecutive chosen positions differ by an element of the gap set `M`. The
//! *M-complexity* is the number of such subwords; for rainbow words (pairwise
//! distinct letters) it only depends on `n` and `M` and is written `K(n, M)`.
//!
//! The crate offers several independent routes to the same numbers:
//!
//! * [`oracle`]: exhaustive enumeration, the reference everything else is tested against;
//! * [`matrix`]: path counting in the gap digraph with a Warshall-style sweep;
//! * [`closed_form`]: binomial sums and closed formulas for special gap shapes;
//! * [`interval`]: tail-count recurrences and generating functions for contiguous gaps;
//! * [`latin`]: witness enumeration with word-set matrices.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closed_form;
mod error;
pub mod interval;
pub mod latin;
pub mod matrix;
pub mod oracle;
pub mod word;

pub use closed_form::{
    binomial, interval_upper_bound, prefix_interval_complexity, single_gap_complexity,
    super_d_complexity,
};
pub use error::Error;
pub use interval::{
    correspondence_check, interval_complexity, one_d_complexity, series_a, series_k, tail_counts,
    tail_counts_simplified, Correspondence, IntervalSpec, SeriesCoefficients, TailCounts,
};
pub use latin::{init_latin, nontrivial_subwords, warshall_latin, WordSetMatrix};
pub use matrix::{build_adjacency, m_complexity, reachability, warshall_paths, CountMatrix};
pub use oracle::{oracle_count_selections, oracle_enumerate, oracle_selections};
pub use word::{parse_word, GapSet, IndexSelection, Word};

/// Arbitrary-precision nonnegative count. Complexities grow like `2^n`.
pub type BigCount = num_bigint::BigUint;

pub type Result<T, E = Error> = core::result::Result<T, E>;
