//! Closed forms for special gap shapes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{BigCount, Error, Result};

/// `C(n, k)`, taken as 0 when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigCount {
    if k < 0 || n < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// `Σ_{k >= start} C(upper(k), lower(k))` for an upper index that never grows
/// and a lower index that grows by one per step; stops at the first term with
/// `upper < lower`.
pub(crate) fn binomial_series(
    start: i64,
    upper: impl Fn(i64) -> i64,
    lower: impl Fn(i64) -> i64,
) -> BigCount {
    let mut total = BigCount::zero();
    let mut k = start;
    loop {
        let (u, l) = (upper(k), lower(k));
        if u < l || u < 0 {
            return total;
        }
        total += binomial(u, l);
        k += 1;
    }
}

fn require_gap(gap: usize, min: usize) -> Result<()> {
    if gap < min {
        Err(Error::GapTooSmall { gap, min })
    } else {
        Ok(())
    }
}

/// `K(n, {d, d+1, …, n-1})` as `Σ_{k>=0} C(n - (d-1)k, k+1)`.
pub fn super_d_complexity(n: usize, d: usize) -> Result<BigCount> {
    require_gap(d, 1)?;
    let (n, step) = (n as i64, d as i64 - 1);
    Ok(binomial_series(0, |k| n - step * k, |k| k + 1))
}

/// `K(n, {1, 2, …, n-d}) = 2^n - (d-2)·2^(d-1) - 2`, valid for `n >= 2d - 2`.
pub fn prefix_interval_complexity(n: usize, d: usize) -> Result<BigCount> {
    require_gap(d, 1)?;
    if n + 2 < 2 * d {
        return Err(Error::PrefixOutOfRange { n, d });
    }
    let value: BigInt = (BigInt::one() << n) - (BigInt::from(d as i64 - 2) << (d - 1)) - 2;
    Ok(value.to_biguint().expect("closed form is nonnegative in its range"))
}

/// `K(n, {d}) = (h+1)(n+m)/2` where `n = hd + m`, `0 <= m < d`.
pub fn single_gap_complexity(n: usize, d: usize) -> Result<BigCount> {
    require_gap(d, 1)?;
    let (h, m) = (n / d, n % d);
    Ok(BigCount::from(h + 1) * BigCount::from(n + m) / 2u32)
}

/// Upper bound on `K(n, {d1, …, d2})`:
/// `n + Σ_{k>=1} C(n - (d1-1)k, k+1) - Σ_{k>=1} C(n - d2·k, k+1)`.
pub fn interval_upper_bound(n: usize, d1: usize, d2: usize) -> Result<BigCount> {
    if d1 == 0 || d1 > d2 {
        return Err(Error::InvalidInterval { d1, d2 });
    }
    let n_i = n as i64;
    let (lo_step, hi_step) = (d1 as i64 - 1, d2 as i64);
    let upto_n = binomial_series(1, |k| n_i - lo_step * k, |k| k + 1);
    let beyond_d2 = binomial_series(1, |k| n_i - hi_step * k, |k| k + 1);
    Ok(BigCount::from(n) + upto_n - beyond_d2)
}
