//! Words, gap sets and index selections.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A nonempty finite sequence of letters.
///
/// Letters are opaque tokens compared with `Ord`; nothing is normalized, so
/// `'a'` and `'A'` are different letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word<T = char> {
    letters: Vec<T>,
    rainbow: bool,
}

impl<T: Ord> Word<T> {
    pub fn new(letters: Vec<T>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        let distinct = letters.iter().collect::<BTreeSet<_>>().len();
        let rainbow = distinct == letters.len();
        Ok(Self { letters, rainbow })
    }
}

impl<T> Word<T> {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when all letters are pairwise distinct.
    pub fn is_rainbow(&self) -> bool {
        self.rainbow
    }

    pub fn letters(&self) -> &[T] {
        &self.letters
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> &T {
        &self.letters[i - 1]
    }
}

impl Word<char> {
    /// The rainbow word `a b c …` of length `n`, for `1 <= n <= 26`.
    pub fn alphabetic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        assert!(n <= 26, "alphabetic rainbow words have at most 26 letters");
        Self::new((b'a'..b'a' + n as u8).map(char::from).collect())
    }
}

impl Word<usize> {
    /// The rainbow word `1 2 … n` over positional labels.
    pub fn positional(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }
}

impl fmt::Display for Word<char> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| fmt::Write::write_char(f, *c))
    }
}

/// Parses a word, one letter per character.
pub fn parse_word(text: &str) -> Result<Word<char>> {
    Word::new(text.chars().collect())
}

/// The set `M` of permitted gaps, kept ascending and deduplicated.
///
/// Elements at or above the length of a word are allowed and simply never
/// apply to that word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapSet {
    gaps: Vec<usize>,
}

impl GapSet {
    pub fn new(gaps: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = gaps.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::ZeroGap);
        }
        Ok(Self { gaps: set.into_iter().collect() })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `{lo, lo+1, …, hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Result<Self> {
        Self::new(lo..=hi)
    }

    pub fn contains(&self, gap: usize) -> bool {
        self.gaps.binary_search(&gap).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.gaps.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.gaps.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.gaps.last().copied()
    }

    /// The gaps that can occur in a word of length `n`, i.e. `M ∩ {1, …, n-1}`.
    pub fn effective(&self, n: usize) -> GapSet {
        GapSet { gaps: self.iter().filter(|&g| g < n).collect() }
    }

    /// `Some((d1, d2))` when the set is exactly `{d1, …, d2}`.
    pub fn as_interval(&self) -> Option<(usize, usize)> {
        let (lo, hi) = (self.min()?, self.max()?);
        (hi - lo + 1 == self.gaps.len()).then_some((lo, hi))
    }

    pub fn is_subset(&self, other: &GapSet) -> bool {
        self.iter().all(|g| other.contains(g))
    }
}

impl fmt::Display for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, g) in self.gaps.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// Strictly increasing 1-based positions `i_1 < … < i_s` whose consecutive
/// differences all lie in a gap set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSelection {
    indices: Vec<usize>,
}

impl IndexSelection {
    /// Validates `indices` against a word of length `n` and the gap set `m`.
    pub fn new(indices: Vec<usize>, n: usize, m: &GapSet) -> Result<Self> {
        let (first, last) = match (indices.first(), indices.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(Error::InvalidSelection),
        };
        let gaps_ok = indices
            .windows(2)
            .all(|pair| pair[1] > pair[0] && m.contains(pair[1] - pair[0]));
        if first < 1 || last > n || !gaps_ok {
            return Err(Error::InvalidSelection);
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The subword `x_{i_1} … x_{i_s}` of `word`.
    pub fn apply<T: Clone>(&self, word: &Word<T>) -> Vec<T> {
        self.indices.iter().map(|&i| word.at(i).clone()).collect()
    }
}
