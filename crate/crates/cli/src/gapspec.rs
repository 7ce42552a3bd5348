//! Textual gap sets: `1,3`, `2-5`, `4-n-1`, `{}`.

use mcomplexity_core::GapSet;

use crate::CliError;

const LENGTH_TOKEN: &str = "n-1";

fn fail(spec: &str, reason: impl Into<String>) -> CliError {
    CliError::GapSpec { spec: spec.to_string(), reason: reason.into() }
}

fn number(spec: &str, token: &str) -> Result<usize, CliError> {
    let token = token.trim();
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(fail(spec, format!("{token:?} is not a positive integer")));
    }
    token.parse().map_err(|_| fail(spec, format!("{token:?} is out of range")))
}

fn length_minus_one(spec: &str, n: Option<usize>) -> Result<usize, CliError> {
    match n {
        Some(n) => Ok(n.saturating_sub(1)),
        None => Err(fail(spec, "\"n-1\" needs a word length")),
    }
}

/// Parses comma-separated gaps or inclusive ranges. The token `n-1` stands for
/// one less than `n`; a range ending in `n-1` may come out empty for short words.
pub fn parse_gap_spec(spec: &str, n: Option<usize>) -> Result<GapSet, CliError> {
    let body = spec.trim();
    let body = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).unwrap_or(body);
    let mut gaps = Vec::new();
    for item in body.split(',').map(str::trim) {
        if item.is_empty() {
            if body.trim().is_empty() {
                continue;
            }
            return Err(fail(spec, "empty item"));
        }
        if item == LENGTH_TOKEN {
            let value = length_minus_one(spec, n)?;
            if value == 0 {
                return Err(fail(spec, "n-1 is 0 for a word of length 1"));
            }
            gaps.push(value);
            continue;
        }
        let Some((lo, hi)) = item.split_once('-') else {
            let value = number(spec, item)?;
            if value == 0 {
                return Err(fail(spec, "gaps must be positive"));
            }
            gaps.push(value);
            continue;
        };
        let lo = number(spec, lo)?;
        if lo == 0 {
            return Err(fail(spec, "gaps must be positive"));
        }
        let hi_token = hi.trim();
        let hi = if hi_token == LENGTH_TOKEN {
            length_minus_one(spec, n)?
        } else {
            let hi = number(spec, hi_token)?;
            if lo > hi {
                return Err(fail(spec, format!("range {lo}-{hi} is reversed")));
            }
            hi
        };
        gaps.extend(lo..=hi);
    }
    Ok(GapSet::new(gaps)?)
}
