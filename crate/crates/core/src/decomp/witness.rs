use rayon::prelude::*;
use serde::Serialize;

use super::Partition;
use crate::error::{Error, Result};
use crate::flats::{flat_shards, Flat, DEFAULT_FLAT_BUDGET};

/// Result of scanning flats for an uncovered, uncolorable one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessScan {
    pub b: usize,
    pub d_max: u32,
    pub witness: Option<Flat>,
    /// Flats examined in canonical order, up to and including the witness.
    pub flats_scanned: u64,
}

/// Ranks `d ≤ d_max` whose flats are not `b`-colorable, i.e. `2^d - 1 > b·d`.
pub fn uncolorable_ranks(b: usize, d_max: u32) -> Vec<u32> {
    (1..=d_max)
        .filter(|&d| (1u128 << d) - 1 > b as u128 * u128::from(d))
        .collect()
}

/// Part index of each vector id (index 0 unused).
pub(super) fn part_table(p: &Partition, n: u32) -> Vec<u32> {
    let mut table = vec![u32::MAX; 1 << n];
    for (i, part) in p.parts().iter().enumerate() {
        for &e in part {
            table[e as usize] = i as u32;
        }
    }
    table
}

/// Whether two elements of the flat spanned by `rows` share a part.
pub(super) fn is_covered(rows: &[u64], table: &[u32], scratch: &mut Vec<u32>) -> bool {
    scratch.clear();
    let mut acc = 0u64;
    for i in 1usize..1 << rows.len() {
        acc ^= rows[i.trailing_zeros() as usize];
        scratch.push(table[acc as usize]);
    }
    scratch.sort_unstable();
    scratch.windows(2).any(|w| w[0] == w[1])
}

pub(super) fn binary_dimension(p: &Partition) -> Result<u32> {
    p.matroid()
        .binary_dimension()
        .ok_or_else(|| Error::Invalid("operation needs a partition of a binary matroid".into()))
}

/// First flat (smallest rank first, then canonical order) that cannot be
/// `b`-colored and has all its elements in distinct parts. Such a flat
/// extends to a transversal that is not `b`-colorable, so finding one
/// refutes `p` outright.
pub fn find_flat_witness(p: &Partition, b: usize, d_max: u32) -> Result<Option<Flat>> {
    Ok(flat_witness_scan(p, b, d_max, DEFAULT_FLAT_BUDGET)?.witness)
}

pub fn flat_witness_scan(p: &Partition, b: usize, d_max: u32, budget: u64) -> Result<WitnessScan> {
    let n = binary_dimension(p)?;
    if d_max > n {
        return Err(Error::Invalid(format!("d_max = {d_max} exceeds n = {n}")));
    }
    let table = part_table(p, n);
    let mut scanned = 0u64;
    for d in uncolorable_ranks(b, d_max) {
        let shards = flat_shards(n, d, budget)?;
        let hit = shards.par_iter().enumerate().find_map_first(|(s, shard)| {
            let mut scratch = Vec::new();
            shard
                .clone()
                .enumerate()
                .find(|(_, f)| !is_covered(f.basis().rows(), &table, &mut scratch))
                .map(|(offset, f)| (s, offset as u64, f))
        });
        match hit {
            Some((s, offset, flat)) => {
                scanned += shards[..s].iter().map(|sh| sh.len()).sum::<u64>() + offset + 1;
                return Ok(WitnessScan {
                    b,
                    d_max,
                    witness: Some(flat),
                    flats_scanned: scanned,
                });
            }
            None => scanned += shards.iter().map(|sh| sh.len()).sum::<u64>(),
        }
    }
    Ok(WitnessScan {
        b,
        d_max,
        witness: None,
        flats_scanned: scanned,
    })
}
