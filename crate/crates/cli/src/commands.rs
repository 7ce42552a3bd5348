use clap::ValueEnum;
use mcomplexity_core::{
    interval_complexity, m_complexity, nontrivial_subwords, one_d_complexity,
    prefix_interval_complexity, series_a, series_k, single_gap_complexity, super_d_complexity,
    BigCount, GapSet, IntervalSpec, Word,
};

use crate::record::{OutputRecord, SeriesRow};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    /// Warshall path counting; any gap set.
    Matrix,
    /// Tail-count recurrence; contiguous gaps d1-d2.
    Recurrence,
    /// Binomial sum; gaps d-(n-1).
    SuperD,
    /// Closed form for one gap d.
    SingleGap,
    /// Closed form for gaps 1-(n-d), needs n >= 2d-2.
    Prefix,
    /// Binomial sum for gaps {1,d}, d >= 2.
    #[value(name = "formula-1d")]
    Formula1d,
}

impl CountMethod {
    pub fn name(self) -> &'static str {
        match self {
            CountMethod::Matrix => "matrix",
            CountMethod::Recurrence => "recurrence",
            CountMethod::SuperD => "super-d",
            CountMethod::SingleGap => "single-gap",
            CountMethod::Prefix => "prefix",
            CountMethod::Formula1d => "formula-1d",
        }
    }
}

fn incompatible(method: CountMethod, gaps: &GapSet, reason: &'static str) -> CliError {
    CliError::Incompatible { method: method.name(), gaps: gaps.to_string(), reason }
}

/// `K(n, M)` by the requested method.
pub fn count(n: usize, gaps: &GapSet, method: CountMethod) -> Result<OutputRecord, CliError> {
    if n == 0 {
        return Err(CliError::ZeroLength);
    }
    let effective = gaps.effective(n);
    let value: BigCount = match method {
        CountMethod::Matrix => m_complexity(n, gaps),
        CountMethod::Recurrence => {
            let (d1, d2) = gaps
                .as_interval()
                .ok_or_else(|| incompatible(method, gaps, "needs a contiguous range d1-d2"))?;
            interval_complexity(n, IntervalSpec::new(d1, d2)?)
        }
        CountMethod::SuperD => match effective.as_interval() {
            Some((d, top)) if top == n - 1 => super_d_complexity(n, d)?,
            _ => return Err(incompatible(method, gaps, "needs gaps d-(n-1)")),
        },
        CountMethod::SingleGap => match gaps.as_slice() {
            [d] => single_gap_complexity(n, *d)?,
            _ => return Err(incompatible(method, gaps, "needs exactly one gap")),
        },
        CountMethod::Prefix => {
            let d = match effective.as_interval() {
                None if effective.is_empty() => n,
                Some((1, top)) => n - top,
                _ => return Err(incompatible(method, gaps, "needs gaps 1-(n-d)")),
            };
            prefix_interval_complexity(n, d)?
        }
        CountMethod::Formula1d => match gaps.as_slice() {
            [1, d] => one_d_complexity(n, *d)?,
            _ => return Err(incompatible(method, gaps, "needs gaps {1,d} with d >= 2")),
        },
    };
    Ok(OutputRecord {
        n,
        gaps: gaps.as_slice().to_vec(),
        method: method.name().to_string(),
        complexity: value.to_string(),
        words: None,
    })
}

/// Sorted M-subwords of `word`. Without `include_single` only words of length at least 2.
pub fn enumerate(word: &Word<char>, gaps: &GapSet, include_single: bool, dedup: bool) -> OutputRecord {
    let mut words: Vec<String> =
        nontrivial_subwords(word, gaps, dedup).into_iter().map(|w| w.into_iter().collect()).collect();
    if include_single {
        words.extend(word.letters().iter().map(char::to_string));
    }
    words.sort();
    if dedup {
        words.dedup();
    }
    OutputRecord {
        n: word.len(),
        gaps: gaps.as_slice().to_vec(),
        method: "warshall-latin".to_string(),
        complexity: words.len().to_string(),
        words: Some(words),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Tail counts a_n.
    A,
    /// Complexities K_n.
    #[value(name = "K", alias = "k")]
    K,
}

/// Coefficients 1..=count of `A(z)` or `K(z)`.
pub fn series(d1: usize, d2: usize, count: usize, which: SeriesKind) -> Result<Vec<SeriesRow>, CliError> {
    let spec = IntervalSpec::new(d1, d2)?;
    let coeffs = match which {
        SeriesKind::A => series_a(spec, count)?,
        SeriesKind::K => series_k(spec, count)?,
    };
    Ok(coeffs.indexed().map(|(n, c)| SeriesRow { n, coefficient: c.to_string() }).collect())
}
