use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flats::ser_big;

/// Dimension threshold for (b,c)-decomposability of the binary matroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub b: u64,
    pub c: u64,
    /// Smallest rank whose flats need more than `b` colors.
    pub d: u32,
    /// `4c² · 2^(d² + d)`; no (b,c)-decomposition exists for `n > n_max`.
    #[serde(serialize_with = "ser_big")]
    pub n_max: BigUint,
}

/// Least `d` with `(2^d - 1)/d > b`, compared exactly as `2^d - 1 > b·d`.
pub fn min_uncolorable_rank(b: u64) -> u32 {
    let mut d = 1u32;
    while (BigUint::one() << d) - 1u32 <= BigUint::from(b) * d {
        d += 1;
    }
    d
}

pub fn theorem_threshold(b: u64, c: u64) -> Result<Threshold> {
    if b == 0 || c == 0 {
        return Err(Error::Invalid("b and c must be at least 1".into()));
    }
    let d = min_uncolorable_rank(b);
    let exp = u64::from(d) * u64::from(d) + u64::from(d);
    let n_max = BigUint::from(4u32) * BigUint::from(c) * BigUint::from(c) * (BigUint::one() << exp);
    Ok(Threshold { b, c, d, n_max })
}
