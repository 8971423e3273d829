use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::witness::{binary_dimension, is_covered, part_table};
use super::{binomial, Partition};
use crate::coloring::coloring_number;
use crate::error::{Error, Result};
use crate::flats::{count_flats_exact, flat_shards, pair_flat_count, ser_big, Flat, DEFAULT_FLAT_BUDGET};

/// Which rank-`d` flats have two elements in a common part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub n: u32,
    pub d: u32,
    pub covered: u64,
    /// In canonical enumeration order.
    pub uncovered: Vec<Flat>,
}

impl CoveringReport {
    pub fn total(&self) -> u64 {
        self.covered + self.uncovered.len() as u64
    }
}

pub fn covering_report(n: u32, d: u32, p: &Partition) -> Result<CoveringReport> {
    covering_report_with_budget(n, d, p, DEFAULT_FLAT_BUDGET)
}

pub fn covering_report_with_budget(n: u32, d: u32, p: &Partition, budget: u64) -> Result<CoveringReport> {
    let dim = binary_dimension(p)?;
    if dim != n {
        return Err(Error::Invalid(format!(
            "partition is of binary({dim}), not binary({n})"
        )));
    }
    let table = part_table(p, n);
    let per_shard: Vec<(u64, Vec<Flat>)> = flat_shards(n, d, budget)?
        .into_par_iter()
        .map(|shard| {
            let mut scratch = Vec::new();
            let mut covered = 0;
            let mut uncovered = Vec::new();
            for f in shard {
                if is_covered(f.basis().rows(), &table, &mut scratch) {
                    covered += 1;
                } else {
                    uncovered.push(f);
                }
            }
            (covered, uncovered)
        })
        .collect();
    let mut report = CoveringReport {
        n,
        d,
        covered: 0,
        uncovered: Vec::new(),
    };
    for (covered, uncovered) in per_shard {
        report.covered += covered;
        report.uncovered.extend(uncovered);
    }
    debug_assert_eq!(BigUint::from(report.total()), count_flats_exact(n, d));
    Ok(report)
}

/// `ℓ · C(ck, 2) · C(2^n, d-2)`: flats that `ℓ` parts of at most `ck`
/// elements can cover, each pair lying in at most `C(2^n, d-2)` flats.
pub fn aggregate_capacity(n: u32, d: u32, ell: u64, c: u64, k: u64) -> BigUint {
    let pairs = binomial(&BigUint::from(c * k), 2);
    let per_pair = binomial(&(BigUint::one() << n), u64::from(d.saturating_sub(2)));
    BigUint::from(ell) * pairs * per_pair
}

/// `4c² · 2^(nd) / n`, the closed form after bounding `ℓ ≤ n` and
/// `k ≤ 2·2^n/n`. Exact rational.
pub fn relaxed_capacity(n: u32, d: u32, c: u64) -> BigRational {
    let num = BigInt::from(4u32) * BigInt::from(c) * BigInt::from(c) * (BigInt::one() << (u64::from(n) * u64::from(d)));
    BigRational::new(num, BigInt::from(n))
}

/// `Σ_i C(|X_i|, 2)` times the exact number of rank-`d` flats through a pair.
pub fn pair_capacity(n: u32, d: u32, p: &Partition) -> BigUint {
    let pairs: BigUint = p.parts().iter().map(|x| binomial(&BigUint::from(x.len()), 2)).sum();
    pairs * pair_flat_count(n, d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapacityReport {
    pub n: u32,
    pub d: u32,
    pub c: u64,
    pub k: u64,
    /// Number of parts actually present.
    pub ell: u64,
    /// Aggregate bound with the partition's own `ℓ`.
    #[serde(serialize_with = "ser_big")]
    pub capacity: BigUint,
    /// Aggregate bound with `ℓ` replaced by `n`.
    #[serde(serialize_with = "ser_big")]
    pub capacity_ell_n: BigUint,
    /// `4c²·2^(nd)/n` written as a reduced fraction.
    pub relaxed: String,
}

/// Capacity bounds for `p`, with `k` its computed coloring number.
pub fn covering_capacity(n: u32, d: u32, p: &Partition, c: u64) -> Result<CapacityReport> {
    let k = coloring_number(p.matroid())? as u64;
    let ell = p.len() as u64;
    let relaxed = relaxed_capacity(n, d, c);
    Ok(CapacityReport {
        n,
        d,
        c,
        k,
        ell,
        capacity: aggregate_capacity(n, d, ell, c, k),
        capacity_ell_n: aggregate_capacity(n, d, u64::from(n), c, k),
        relaxed: format!("{}/{}", relaxed.numer(), relaxed.denom()),
    })
}
