//! Rank-d flats of the binary matroid: canonical enumeration and exact counts.
//!
//! A rank-d flat is a d-dimensional subspace of GF(2)^n minus the zero
//! vector, named by its reduced echelon basis. Enumeration walks the
//! echelon forms directly: choose the pivot columns, then fill the free
//! entries. Nothing is generated twice, so no deduplication is needed.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{self, check_width, Gf2Rref};

pub const DEFAULT_FLAT_BUDGET: u64 = 10_000_000;

/// A rank-`d` flat of `binary_matroid(n)`.
///
/// Equality is equality of canonical bases, which coincides with equality
/// of element sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    n: u32,
    basis: Gf2Rref,
}

impl Flat {
    pub fn new(n: u32, basis: Gf2Rref) -> Result<Self> {
        if basis.width() != n {
            return Err(Error::WidthMismatch(n, basis.width()));
        }
        basis.check_invariants()?;
        Ok(Self { n, basis })
    }

    /// The flat spanned by `vectors` (raw bits of width `n`).
    pub fn spanned_by(n: u32, vectors: &[u64]) -> Result<Self> {
        check_width(n)?;
        if let Some(&v) = vectors.iter().find(|&&v| v >> n != 0) {
            return Err(Error::VectorOutOfRange { width: n, bits: v });
        }
        Ok(Self {
            n,
            basis: gf2::rref_of_bits(n, vectors.iter().copied()),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &Gf2Rref {
        &self.basis
    }

    /// The `2^d - 1` elements, increasing.
    pub fn elements(&self) -> Result<Vec<u64>> {
        gf2::span_nonzero_bits(self.basis.rows())
    }

    pub fn contains(&self, e: u64) -> bool {
        e != 0 && e >> self.n == 0 && self.basis.contains_bits(e)
    }
}

#[derive(Serialize, Deserialize)]
struct FlatWire {
    n: u32,
    d: usize,
    #[serde(with = "gf2::hex_ids")]
    basis: Vec<u64>,
}

impl Serialize for Flat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FlatWire {
            n: self.n,
            d: self.d(),
            basis: self.basis.rows().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Flat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = FlatWire::deserialize(d)?;
        let basis = Gf2Rref::from_rows(w.n, w.basis).map_err(serde::de::Error::custom)?;
        if basis.rank() != w.d {
            return Err(serde::de::Error::custom(format!(
                "flat declares d = {} but basis has {} rows",
                w.d,
                basis.rank()
            )));
        }
        Flat::new(w.n, basis).map_err(serde::de::Error::custom)
    }
}

/// Number of rank-`d` flats of `binary_matroid(n)`:
/// `∏_{i=1}^{d} (2^n - 2^{i-1}) / (2^d - 2^{i-1})`.
///
/// Zero when `d > n`; one when `d = 0` (the empty flat).
pub fn count_flats_exact(n: u32, d: u32) -> BigUint {
    if d > n {
        return BigUint::zero();
    }
    let pow = |e: u32| BigUint::one() << e;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=d {
        num *= pow(n) - pow(i - 1);
        den *= pow(d) - pow(i - 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// `2^(dn - d² - d)`, the guaranteed minimum number of rank-`d` flats
/// when `d ≤ n/2`. Refused outside that range, where no bound is claimed.
pub fn flat_count_lower_bound(n: u32, d: u32) -> Result<BigUint> {
    if 2 * u64::from(d) > u64::from(n) {
        return Err(Error::Invalid(format!(
            "lower bound needs d ≤ n/2, got n = {n}, d = {d}"
        )));
    }
    let (n, d) = (u64::from(n), u64::from(d));
    Ok(BigUint::one() << (d * n - d * d - d))
}

/// Exact count alongside the lower bound, for census reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatCount {
    pub n: u32,
    pub d: u32,
    #[serde(serialize_with = "ser_big")]
    pub exact: BigUint,
    #[serde(serialize_with = "ser_big_opt")]
    pub lower_bound: Option<BigUint>,
}

pub(crate) fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_big_opt<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

pub fn flat_count(n: u32, d: u32) -> FlatCount {
    FlatCount {
        n,
        d,
        exact: count_flats_exact(n, d),
        lower_bound: flat_count_lower_bound(n, d).ok(),
    }
}

fn check_enumeration(n: u32, d: u32, budget: u64) -> Result<()> {
    check_width(n)?;
    if d == 0 || d > n {
        return Err(Error::Invalid(format!(
            "flat rank must satisfy 1 ≤ d ≤ n, got n = {n}, d = {d}"
        )));
    }
    let count = count_flats_exact(n, d);
    if count > BigUint::from(budget) {
        return Err(Error::refused("rank-d flat count", count, budget));
    }
    Ok(())
}

/// Every pivot pattern of a rank-`d` echelon basis in `n` columns, in
/// lexicographic order. Each pattern is an independent shard of the
/// enumeration.
pub fn pivot_patterns(n: u32, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    let mut combo: Vec<u32> = (0..d).collect();
    loop {
        out.push(combo.clone());
        // Advance to the next combination.
        let mut i = d as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < n - d + i as u32 {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..d as usize {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Flats whose basis has exactly the given pivot columns.
#[derive(Debug, Clone)]
pub struct PatternFlats {
    n: u32,
    pivots: Vec<u32>,
    /// Free columns of each row, increasing.
    free: Vec<Vec<u32>>,
    /// Bit offset of each row inside the counter; row 0 is most significant.
    shift: Vec<u32>,
    counter: u64,
    end: u64,
}

impl PatternFlats {
    pub fn new(n: u32, pivots: &[u32]) -> Self {
        let free: Vec<Vec<u32>> = pivots
            .iter()
            .map(|&p| (p + 1..n).filter(|c| !pivots.contains(c)).collect())
            .collect();
        let mut shift = vec![0; free.len()];
        let mut acc = 0;
        for i in (0..free.len()).rev() {
            shift[i] = acc;
            acc += free[i].len() as u32;
        }
        assert!(acc < 64, "pattern too large to enumerate");
        Self {
            n,
            pivots: pivots.to_vec(),
            free,
            shift,
            counter: 0,
            end: 1 << acc,
        }
    }

    pub fn len(&self) -> u64 {
        self.end
    }

    pub fn is_empty(&self) -> bool {
        self.end == 0
    }

    fn rows_for(&self, counter: u64) -> Vec<u64> {
        self.pivots
            .iter()
            .zip(&self.free)
            .zip(&self.shift)
            .map(|((&p, free), &shift)| {
                let bits = counter >> shift;
                free.iter()
                    .enumerate()
                    .filter(|(t, _)| bits >> t & 1 == 1)
                    .fold(1u64 << p, |row, (_, &c)| row | 1 << c)
            })
            .collect()
    }
}

impl Iterator for PatternFlats {
    type Item = Flat;

    fn next(&mut self) -> Option<Flat> {
        if self.counter >= self.end {
            return None;
        }
        // Row 0 holds the top counter bits and free columns map upward, so
        // counter order is lexicographic order of the row tuple.
        let rows = self.rows_for(self.counter);
        self.counter += 1;
        Some(Flat {
            n: self.n,
            basis: Gf2Rref::from_rows_unchecked(self.n, rows),
        })
    }

    fn nth(&mut self, k: usize) -> Option<Flat> {
        self.counter = self.counter.saturating_add(k as u64).min(self.end);
        self.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.counter) as usize;
        (left, Some(left))
    }
}

/// Every rank-`d` flat of `binary_matroid(n)` exactly once, ordered by
/// pivot pattern and then lexicographically by basis rows.
pub fn enumerate_flats(n: u32, d: u32) -> Result<impl Iterator<Item = Flat>> {
    enumerate_flats_with_budget(n, d, DEFAULT_FLAT_BUDGET)
}

pub fn enumerate_flats_with_budget(n: u32, d: u32, budget: u64) -> Result<impl Iterator<Item = Flat>> {
    check_enumeration(n, d, budget)?;
    Ok(pivot_patterns(n, d)
        .into_iter()
        .flat_map(move |p| PatternFlats::new(n, &p)))
}

/// Shards of the enumeration, one per pivot pattern, in canonical order.
pub fn flat_shards(n: u32, d: u32, budget: u64) -> Result<Vec<PatternFlats>> {
    check_enumeration(n, d, budget)?;
    Ok(pivot_patterns(n, d)
        .into_iter()
        .map(|p| PatternFlats::new(n, &p))
        .collect())
}

/// Rank-`d` flats containing both `x` and `y`, in canonical order.
pub fn flats_through_pair(n: u32, d: u32, x: u64, y: u64) -> Result<impl Iterator<Item = Flat>> {
    flats_through_pair_with_budget(n, d, x, y, DEFAULT_FLAT_BUDGET)
}

pub fn flats_through_pair_with_budget(
    n: u32,
    d: u32,
    x: u64,
    y: u64,
    budget: u64,
) -> Result<impl Iterator<Item = Flat>> {
    check_width(n)?;
    if d < 2 {
        return Err(Error::Invalid("a flat through two points has rank at least 2".into()));
    }
    for e in [x, y] {
        if e == 0 || e >> n != 0 {
            return Err(Error::ForeignElement(e));
        }
    }
    if x == y {
        return Err(Error::Invalid("pair elements must differ".into()));
    }
    Ok(enumerate_flats_with_budget(n, d, budget)?.filter(move |f| f.contains(x) && f.contains(y)))
}

/// Number of rank-`d` flats through any fixed pair of distinct elements:
/// the (d-2)-subspaces of the quotient by the pair's span.
pub fn pair_flat_count(n: u32, d: u32) -> BigUint {
    if d < 2 || n < 2 {
        return BigUint::zero();
    }
    count_flats_exact(n - 2, d - 2)
}
