//! Contiguous gap ranges `{d1, …, d2}`: tail-count recurrences, generating
//! functions, and the `{1, d}` correspondence.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::closed_form::{binomial_series, super_d_complexity};
use crate::{BigCount, Error, Result};

/// The gap range `{d1, d1+1, …, d2}` with `1 <= d1 <= d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalSpec {
    d1: usize,
    d2: usize,
}

impl IntervalSpec {
    pub fn new(d1: usize, d2: usize) -> Result<Self> {
        if d1 == 0 || d1 > d2 {
            return Err(Error::InvalidInterval { d1, d2 });
        }
        Ok(Self { d1, d2 })
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    /// Coefficients of `1 - z - z^d1 + z^(d2+1)`, lowest degree first.
    pub fn denominator(&self) -> Vec<BigInt> {
        let mut poly = alloc::vec![BigInt::zero(); self.d2 + 2];
        poly[0] += 1;
        poly[1] -= 1;
        poly[self.d1] -= 1;
        poly[self.d2 + 1] += 1;
        poly
    }
}

/// `a_1, …, a_n`: how many subwords end at each position. `a_i = 0` for `i <= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailCounts(Vec<BigCount>);

impl TailCounts {
    /// `a_i`, with the zero convention for `i <= 0`. Panics past the end.
    pub fn get(&self, i: i64) -> BigCount {
        if i <= 0 {
            BigCount::zero()
        } else {
            self.0[i as usize - 1].clone()
        }
    }

    pub fn values(&self) -> &[BigCount] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> BigCount {
        self.0.iter().sum()
    }
}

/// Full recurrence `a_i = 1 + a_{i-d1} + a_{i-d1-1} + … + a_{i-d2}`.
pub fn tail_counts(n: usize, spec: IntervalSpec) -> TailCounts {
    let mut a: Vec<BigCount> = Vec::with_capacity(n);
    for i in 1..=n {
        let mut value = BigCount::one();
        for gap in (spec.d1..=spec.d2).take_while(|&g| g < i) {
            value += &a[i - gap - 1];
        }
        a.push(value);
    }
    TailCounts(a)
}

/// Telescoped form `a_i = a_{i-1} + a_{i-d1} - a_{i-1-d2}` for `i >= 2`, seeded with `a_1 = 1`.
///
/// The difference of two full recurrences only cancels the constant term
/// when both exist, hence the explicit seed.
pub fn tail_counts_simplified(n: usize, spec: IntervalSpec) -> TailCounts {
    let mut out = TailCounts(Vec::with_capacity(n));
    for i in 1..=n as i64 {
        let value = if i == 1 {
            BigCount::one()
        } else {
            out.get(i - 1) + out.get(i - spec.d1 as i64) - out.get(i - 1 - spec.d2 as i64)
        };
        out.0.push(value);
    }
    out
}

/// `K(n, {d1, …, d2}) = a_1 + … + a_n`. Gaps at or beyond `n` contribute nothing.
pub fn interval_complexity(n: usize, spec: IntervalSpec) -> BigCount {
    tail_counts(n, spec).sum()
}

/// Coefficients `c_0, c_1, …` of a formal power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficients(Vec<BigCount>);

impl SeriesCoefficients {
    pub fn get(&self, i: usize) -> &BigCount {
        &self.0[i]
    }

    pub fn as_slice(&self) -> &[BigCount] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(index, coefficient)` pairs, skipping the constant term.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, &BigCount)> + '_ {
        self.0.iter().enumerate().skip(1)
    }
}

/// First `len` coefficients of `numerator / denominator` by exact long division.
///
/// The constant term of `denominator` must be `±1` so every coefficient stays integral.
pub fn expand_rational(numerator: &[BigInt], denominator: &[BigInt], len: usize) -> Vec<BigInt> {
    let lead = denominator.first().expect("denominator must be nonzero");
    assert!(lead.abs().is_one(), "denominator constant term must be ±1");
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = numerator.get(n).cloned().unwrap_or_default();
        for (j, q) in denominator.iter().enumerate().skip(1).take(n) {
            if !q.is_zero() {
                acc -= q * &out[n - j];
            }
        }
        out.push(acc * lead);
    }
    out
}

fn to_counts(coeffs: Vec<BigInt>) -> SeriesCoefficients {
    SeriesCoefficients(
        coeffs
            .into_iter()
            .map(|c| c.to_biguint().expect("counting series has nonnegative coefficients"))
            .collect(),
    )
}

fn numerator_z() -> [BigInt; 2] {
    [BigInt::zero(), BigInt::one()]
}

/// `A(z) = z / (z^(d2+1) - z^d1 - z + 1)`, coefficients `0..=count`.
pub fn series_a(spec: IntervalSpec, count: usize) -> Result<SeriesCoefficients> {
    if count == 0 {
        return Err(Error::EmptySeries);
    }
    Ok(to_counts(expand_rational(&numerator_z(), &spec.denominator(), count + 1)))
}

/// `K(z) = z / ((1 - z)(z^(d2+1) - z^d1 - z + 1))`, coefficients `0..=count`.
pub fn series_k(spec: IntervalSpec, count: usize) -> Result<SeriesCoefficients> {
    if count == 0 {
        return Err(Error::EmptySeries);
    }
    let base = spec.denominator();
    let mut denominator = alloc::vec![BigInt::zero(); base.len() + 1];
    for (i, c) in base.iter().enumerate() {
        denominator[i] += c;
        denominator[i + 1] -= c;
    }
    Ok(to_counts(expand_rational(&numerator_z(), &denominator, count + 1)))
}

/// `K(n, {1, d}) = Σ_{k>=0} C(n + 1 - (d-1)k, k+2)` for `d >= 2`.
pub fn one_d_complexity(n: usize, d: usize) -> Result<BigCount> {
    if d < 2 {
        return Err(Error::GapTooSmall { gap: d, min: 2 });
    }
    let (top, step) = (n as i64 + 1, d as i64 - 1);
    Ok(binomial_series(0, |k| top - step * k, |k| k + 2))
}

/// Both sides of the `{1, d}` / super-`d` correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub n: usize,
    pub d: usize,
    /// `K(n, {1, d})`.
    pub one_d: BigCount,
    /// `K(n+d, {d, …, n+d-1}) - (n+d)`: super-`d` subwords of length at least 2.
    pub super_d_nontrivial: BigCount,
}

impl Correspondence {
    pub fn holds(&self) -> bool {
        self.one_d == self.super_d_nontrivial
    }
}

pub fn correspondence_check(n: usize, d: usize) -> Result<Correspondence> {
    let one_d = one_d_complexity(n, d)?;
    let super_d_nontrivial = super_d_complexity(n + d, d)? - BigCount::from(n + d);
    Ok(Correspondence { n, d, one_d, super_d_nontrivial })
}
