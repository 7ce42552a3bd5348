use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word must contain at least one letter.
    EmptyWord,
    /// Gaps are positive integers.
    ZeroGap,
    /// Index selection is not strictly increasing, out of range, or uses a gap outside `M`.
    InvalidSelection,
    /// A gap parameter below the smallest value the formula accepts.
    GapTooSmall { gap: usize, min: usize },
    /// Contiguous gap range with `d1 > d2` or `d1 == 0`.
    InvalidInterval { d1: usize, d2: usize },
    /// The `{1, …, n-d}` closed form only holds for `n >= 2d - 2`.
    PrefixOutOfRange { n: usize, d: usize },
    /// A series needs at least one coefficient.
    EmptySeries,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => f.write_str("word must not be empty"),
            Error::ZeroGap => f.write_str("gaps must be positive"),
            Error::InvalidSelection => f.write_str("index selection does not fit the word and gap set"),
            Error::GapTooSmall { gap, min } => write!(f, "gap {gap} is below the minimum {min}"),
            Error::InvalidInterval { d1, d2 } => {
                write!(f, "invalid gap interval ({d1},{d2}): need 1 <= d1 <= d2")
            }
            Error::PrefixOutOfRange { n, d } => {
                write!(f, "prefix formula requires n >= 2d-2, got n={n}, d={d}")
            }
            Error::EmptySeries => f.write_str("coefficient count must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}
