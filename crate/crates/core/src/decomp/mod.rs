//! (b,c)-decompositions: a partition of the ground set into parts of size
//! at most `c·k` (with `k` the coloring number) such that every transversal,
//! one element per part, is `b`-colorable.
//!
//! - [`verify_decomposition`] decides the definition outright.
//! - [`find_flat_witness`] looks for a flat that cannot be `b`-colored and
//!   has every element in a different part.
//! - [`covering_report`] and [`covering_capacity`] measure the counting
//!   argument: how many flats a partition covers against how many it could.
//! - [`theorem_threshold`] gives the dimension past which the binary
//!   matroid has no (b,c)-decomposition at all.
//! - [`search_decomposition`] hunts for decompositions of small matroids.

mod covering;
mod search;
mod threshold;
mod verify;
mod witness;

pub use covering::{
    aggregate_capacity, covering_capacity, covering_report, covering_report_with_budget, pair_capacity,
    relaxed_capacity, CapacityReport, CoveringReport,
};
pub use search::{search_decomposition, SearchOutcome, SearchReport, DEFAULT_SEARCH_BUDGET, SEARCH_LIMIT};
pub use threshold::{min_uncolorable_rank, theorem_threshold, Threshold};
pub use verify::{replay_certificate, verify_decomposition, verify_decomposition_with_budget};
pub use witness::{find_flat_witness, flat_witness_scan, uncolorable_ranks, WitnessScan};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coloring::{coloring_number, UnionColoring};
use crate::error::{Error, Result};
use crate::flats::Flat;
use crate::gf2::XorBasis;
use crate::matroid::{IndexedMatroid, Matroid, MatroidSpec};

pub const DEFAULT_TRANSVERSAL_BUDGET: u64 = 10_000_000;

/// Most parts a verified partition may have; transversals of this size are
/// still checkable exhaustively.
pub const MAX_PARTS: usize = 20;

/// A partition of a matroid's ground set into nonempty parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    matroid: Matroid,
    parts: Vec<Vec<u64>>,
}

impl Partition {
    /// Validates that `parts` are nonempty, disjoint and cover the ground
    /// set. Each part is stored sorted; part order is kept.
    pub fn new(matroid: Matroid, parts: Vec<Vec<u64>>) -> Result<Self> {
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return Err(Error::Invalid(format!("part {i} is empty")));
            }
            part.sort_unstable();
        }
        let all: Vec<u64> = parts.iter().flatten().copied().collect();
        let all = matroid.normalize(&all)?;
        if all.len() as u64 != matroid.ground_len() {
            return Err(Error::Invalid(format!(
                "parts cover {} of {} ground elements",
                all.len(),
                matroid.ground_len()
            )));
        }
        Ok(Self { matroid, parts })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn parts(&self) -> &[Vec<u64>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_of(&self, e: u64) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&e).is_ok())
    }

    pub fn to_file(&self) -> PartitionFile {
        PartitionFile {
            matroid: self.matroid.spec().clone(),
            parts: self.parts.clone(),
        }
    }

    /// Parts as index lists into `im`.
    pub(crate) fn indexed_parts(&self, im: &IndexedMatroid) -> Vec<Vec<usize>> {
        self.parts
            .iter()
            .map(|p| p.iter().map(|&e| im.index_of(e).expect("validated part")).collect())
            .collect()
    }

    /// Number of full transversals, `∏ |X_i|`.
    pub fn transversal_count(&self) -> BigUint {
        self.parts
            .iter()
            .fold(BigUint::one(), |acc, p| acc * BigUint::from(p.len()))
    }
}

/// Partition file: `{"matroid": <matroid spec>, "parts": [[ids...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionFile {
    pub matroid: MatroidSpec,
    pub parts: Vec<Vec<u64>>,
}

impl PartitionFile {
    pub fn build(&self) -> Result<Partition> {
        Partition::new(self.matroid.build()?, self.parts.clone())
    }
}

/// `b`, `c`, and the matroid's coloring number `k`, computed rather than
/// supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompParams {
    pub b: usize,
    pub c: usize,
    pub k: usize,
}

impl DecompParams {
    pub fn new(m: &Matroid, b: usize, c: usize) -> Result<Self> {
        if b == 0 || c == 0 {
            return Err(Error::Invalid("b and c must be at least 1".into()));
        }
        let k = coloring_number(m)?;
        if let Some(n) = m.binary_dimension() {
            let predicted = binary_coloring_number(n);
            if BigUint::from(k) != predicted {
                return Err(Error::Invalid(format!(
                    "computed coloring number {k} of binary({n}) disagrees with ⌈2^n/n⌉ = {predicted}"
                )));
            }
        }
        Ok(Self { b, c, k })
    }

    pub fn part_limit(&self) -> usize {
        self.c * self.k
    }
}

/// `⌈2^n / n⌉`, the coloring number of `binary_matroid(n)`.
pub fn binary_coloring_number(n: u32) -> BigUint {
    let n_big = BigUint::from(n);
    ((BigUint::one() << n) + &n_big - 1u32) / n_big
}

/// `⌈(2^d - 1) / d⌉`, the coloring number of any rank-`d` flat of a binary
/// matroid.
pub fn flat_coloring_number(d: u32) -> BigUint {
    let d_big = BigUint::from(d);
    ((BigUint::one() << d) - 1u32 + &d_big - 1u32) / d_big
}

/// Exact binomial coefficient with a big top argument.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}

/// Verdict of a decomposition check, with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    /// Part `part` has more than `c·k` elements.
    SizeViolation {
        part: usize,
        size: usize,
        limit: usize,
    },
    /// One element from each part, together not `b`-colorable.
    WitnessTransversal {
        transversal: Vec<u64>,
    },
    /// A flat that is not `b`-colorable with its elements in distinct parts.
    WitnessFlat {
        flat: Flat,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Full transversals up to and including the witness, in canonical order.
    pub transversals_checked: u64,
    /// Flats up to and including the witness, in canonical order.
    pub flats_scanned: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompReport {
    pub params: DecompParams,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub stats: Stats,
}

/// A partial transversal kept `b`-colorable as elements are added.
#[derive(Clone)]
#[allow(clippy::large_enum_variant)]
pub(crate) enum TransversalState<'a> {
    /// `b = 1` over a linear rule: plain independence.
    Independent(XorBasis),
    Union(UnionColoring<'a>),
}

impl<'a> TransversalState<'a> {
    pub fn new(m: &Matroid, im: &'a IndexedMatroid, b: usize) -> Self {
        if b == 1 && m.linear_width().is_some() {
            TransversalState::Independent(XorBasis::new())
        } else {
            TransversalState::Union(UnionColoring::new(im, b))
        }
    }

    /// Adds index `i`; false if the set stops being `b`-colorable (the
    /// state is then unspecified and must be discarded).
    pub fn push(&mut self, im: &IndexedMatroid, i: usize) -> bool {
        match self {
            TransversalState::Independent(basis) => basis.insert(im.element(i)),
            TransversalState::Union(u) => u.insert(i),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::binary_matroid;

    #[test]
    fn partition_validation() {
        let m = binary_matroid(2).unwrap();
        assert!(Partition::new(m.clone(), vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Partition::new(m.clone(), vec![vec![1, 2]]).is_err());
        assert!(Partition::new(m.clone(), vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Partition::new(m.clone(), vec![vec![1, 2, 3], vec![]]).is_err());
        assert!(Partition::new(m, vec![vec![1, 2, 3, 4]]).is_err());
    }

    #[test]
    fn partition_file_round_trip() {
        let json = r#"{"matroid":{"kind":"binary","n":2},"parts":[[2,1],[3]]}"#;
        let file: PartitionFile = serde_json::from_str(json).unwrap();
        let p = file.build().unwrap();
        assert_eq!(p.parts(), &[vec![1, 2], vec![3]]);
        assert_eq!(p.part_of(3), Some(1));
        assert_eq!(p.transversal_count(), BigUint::from(2u32));
    }

    #[test]
    fn params_cross_check_formula() {
        for (n, k) in [(2, 2), (3, 3), (4, 4), (5, 7)] {
            let p = DecompParams::new(&binary_matroid(n).unwrap(), 1, 1).unwrap();
            assert_eq!(p.k, k);
            assert_eq!(binary_coloring_number(n), BigUint::from(k));
        }
        assert!(DecompParams::new(&binary_matroid(2).unwrap(), 0, 1).is_err());
    }

    #[test]
    fn small_formulas() {
        let want = [1u32, 2, 3, 4, 7, 11, 19];
        for (d, w) in (1..).zip(want) {
            assert_eq!(flat_coloring_number(d), BigUint::from(w), "d = {d}");
        }
        assert_eq!(binomial(&BigUint::from(4u32), 2), BigUint::from(6u32));
        assert_eq!(binomial(&BigUint::from(16u32), 0), BigUint::one());
        assert_eq!(binomial(&BigUint::from(3u32), 5), BigUint::zero());
        assert_eq!(binomial(&BigUint::from(52u32), 5), BigUint::from(2_598_960u32));
    }

    #[test]
    fn report_json_shape() {
        let r = DecompReport {
            params: DecompParams { b: 1, c: 1, k: 2 },
            verdict: Verdict::WitnessTransversal {
                transversal: vec![1, 2, 3],
            },
            stats: Stats {
                transversals_checked: 1,
                flats_scanned: 0,
            },
        };
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"params":{"b":1,"c":1,"k":2},"verdict":"witness_transversal","transversal":[1,2,3],"stats":{"transversals_checked":1,"flats_scanned":0}}"#
        );
        assert_eq!(serde_json::from_str::<DecompReport>(&json).unwrap(), r);
    }
}
