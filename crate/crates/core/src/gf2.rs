//! Bit-packed linear algebra over GF(2).
//!
//! A vector of width `n` is a `u64` whose bit `i` is coordinate `i`. The
//! pivot of a nonzero vector is its lowest set bit, so a reduced echelon
//! basis lists rows by increasing pivot and every pivot column is zero in
//! all other rows.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Widest vector that fits in one machine word with headroom for `1 << n`.
pub const MAX_WIDTH: u32 = 62;

/// Largest rank whose span [`gf2_span_nonzero`] will materialize.
pub const MAX_SPAN_RANK: usize = 25;

/// An `width`-dimensional vector over GF(2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vec {
    width: u32,
    bits: u64,
}

impl Gf2Vec {
    pub fn new(width: u32, bits: u64) -> Result<Self> {
        check_width(width)?;
        if bits >> width != 0 {
            return Err(Error::VectorOutOfRange { width, bits });
        }
        Ok(Self { width, bits })
    }

    pub fn zero(width: u32) -> Result<Self> {
        Self::new(width, 0)
    }

    pub const fn width(self) -> u32 {
        self.width
    }

    pub const fn bits(self) -> u64 {
        self.bits
    }

    pub const fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Lowest set coordinate, if any.
    pub fn pivot(self) -> Option<u32> {
        (self.bits != 0).then(|| self.bits.trailing_zeros())
    }

    /// Lowercase hex of the integer id, no prefix.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.bits)
    }

    pub fn from_hex(width: u32, s: &str) -> Result<Self> {
        let bits = u64::from_str_radix(s, 16).map_err(|e| Error::Invalid(format!("bad hex vector {s:?}: {e}")))?;
        Self::new(width, bits)
    }
}

impl std::ops::BitXor for Gf2Vec {
    type Output = Gf2Vec;

    fn bitxor(self, rhs: Self) -> Self {
        assert_eq!(self.width, rhs.width, "xor of vectors with different widths");
        Gf2Vec {
            width: self.width,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Debug for Gf2Vec {
    /// Coordinates in index order, coordinate 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.width)
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect();
        write!(f, "Gf2Vec({s})")
    }
}

pub(crate) fn check_width(width: u32) -> Result<()> {
    if (1..=MAX_WIDTH).contains(&width) {
        Ok(())
    } else {
        Err(Error::WidthOutOfRange(width))
    }
}

fn common_width(vectors: &[Gf2Vec]) -> Result<Option<u32>> {
    let mut width = None;
    for v in vectors {
        match width {
            None => width = Some(v.width),
            Some(w) if w != v.width => return Err(Error::WidthMismatch(w, v.width)),
            Some(_) => {}
        }
    }
    Ok(width)
}

/// Incremental echelon basis indexed by pivot.
///
/// `rows[p]` is either zero or a vector whose lowest set bit is `p`.
#[derive(Clone)]
pub struct XorBasis {
    rows: [u64; 64],
    rank: usize,
}

impl Default for XorBasis {
    fn default() -> Self {
        Self::new()
    }
}

impl XorBasis {
    pub const fn new() -> Self {
        Self { rows: [0; 64], rank: 0 }
    }

    pub const fn rank(&self) -> usize {
        self.rank
    }

    /// Reduces `x` against the basis; zero iff `x` is in the span.
    #[inline]
    pub fn reduce(&self, mut x: u64) -> u64 {
        while x != 0 {
            let p = x.trailing_zeros() as usize;
            let row = self.rows[p];
            if row == 0 {
                return x;
            }
            x ^= row;
        }
        0
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        self.reduce(x) == 0
    }

    /// Adds `x`; returns whether the rank grew.
    #[inline]
    pub fn insert(&mut self, x: u64) -> bool {
        let r = self.reduce(x);
        if r == 0 {
            return false;
        }
        self.rows[r.trailing_zeros() as usize] = r;
        self.rank += 1;
        true
    }

    fn echelon_rows(&self) -> Vec<u64> {
        self.rows.iter().copied().filter(|&r| r != 0).collect()
    }
}

/// Rank of the bit patterns in `vectors`, without width bookkeeping.
#[inline]
pub fn rank_of_bits(vectors: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = XorBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Dimension of the span of `vectors`.
pub fn gf2_rank(vectors: &[Gf2Vec]) -> Result<usize> {
    common_width(vectors)?;
    Ok(rank_of_bits(vectors.iter().map(|v| v.bits)))
}

/// A subspace in reduced row echelon form; the canonical name of its span.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Rref {
    width: u32,
    rows: Vec<u64>,
}

impl fmt::Debug for Gf2Rref {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows.iter().map(|&b| Gf2Vec {
                width: self.width,
                bits: b,
            }))
            .finish()
    }
}

impl Gf2Rref {
    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Row bit patterns in increasing pivot order.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn vectors(&self) -> impl Iterator<Item = Gf2Vec> + '_ {
        self.rows.iter().map(move |&bits| Gf2Vec {
            width: self.width,
            bits,
        })
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| r.trailing_zeros())
    }

    /// Builds from rows that are already in reduced echelon form.
    pub fn from_rows(width: u32, rows: Vec<u64>) -> Result<Self> {
        check_width(width)?;
        let rref = Self { width, rows };
        rref.check_invariants()?;
        Ok(rref)
    }

    /// Rows the caller guarantees to be reduced; checked in debug builds.
    pub(crate) fn from_rows_unchecked(width: u32, rows: Vec<u64>) -> Self {
        let rref = Self { width, rows };
        debug_assert!(rref.check_invariants().is_ok(), "{rref:?} is not reduced");
        rref
    }

    pub fn check_invariants(&self) -> Result<()> {
        let mut prev: Option<u32> = None;
        let mut pivot_mask = 0u64;
        if self.rows.len() > self.width as usize {
            return Err(Error::Invalid("more rows than columns".into()));
        }
        for &r in &self.rows {
            if r == 0 {
                return Err(Error::Invalid("zero row in echelon basis".into()));
            }
            if r >> self.width != 0 {
                return Err(Error::VectorOutOfRange {
                    width: self.width,
                    bits: r,
                });
            }
            let p = r.trailing_zeros();
            if prev.is_some_and(|q| q >= p) {
                return Err(Error::Invalid("pivots not strictly increasing".into()));
            }
            prev = Some(p);
            pivot_mask |= 1 << p;
        }
        for &r in &self.rows {
            let p = r.trailing_zeros();
            if r & pivot_mask != 1 << p {
                return Err(Error::Invalid("pivot column not cleared".into()));
            }
        }
        Ok(())
    }

    /// Whether `x` lies in the span (zero included).
    #[inline]
    pub fn contains_bits(&self, mut x: u64) -> bool {
        for &r in &self.rows {
            if x >> r.trailing_zeros() & 1 == 1 {
                x ^= r;
            }
        }
        x == 0
    }

    pub fn contains(&self, v: Gf2Vec) -> bool {
        v.width == self.width && self.contains_bits(v.bits)
    }
}

/// Canonical reduced echelon basis of the rows given as raw bits.
pub(crate) fn rref_of_bits(width: u32, vectors: impl IntoIterator<Item = u64>) -> Gf2Rref {
    let mut basis = XorBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    let mut rows = basis.echelon_rows();
    // Back-substitute from the highest pivot down.
    for i in (0..rows.len()).rev() {
        let p = rows[i].trailing_zeros();
        let row = rows[i];
        for r in rows[..i].iter_mut() {
            if *r >> p & 1 == 1 {
                *r ^= row;
            }
        }
    }
    Gf2Rref::from_rows_unchecked(width, rows)
}

/// Reduced row echelon form of the span of `vectors`.
///
/// The empty input has no width to report; callers needing the zero
/// subspace of a particular width use [`gf2_rref_in`].
pub fn gf2_rref(vectors: &[Gf2Vec]) -> Result<Gf2Rref> {
    let width = common_width(vectors)?
        .ok_or_else(|| Error::Invalid("empty vector set has no width; use gf2_rref_in".into()))?;
    Ok(rref_of_bits(width, vectors.iter().map(|v| v.bits)))
}

/// Like [`gf2_rref`], with an explicit width so the empty set is allowed.
pub fn gf2_rref_in(width: u32, vectors: &[Gf2Vec]) -> Result<Gf2Rref> {
    check_width(width)?;
    if let Some(w) = common_width(vectors)? {
        if w != width {
            return Err(Error::WidthMismatch(width, w));
        }
    }
    Ok(rref_of_bits(width, vectors.iter().map(|v| v.bits)))
}

/// Raw bits of every nonzero vector in the span of `rows`, sorted.
pub(crate) fn span_nonzero_bits(rows: &[u64]) -> Result<Vec<u64>> {
    if rows.len() > MAX_SPAN_RANK {
        return Err(Error::refused("span rank", rows.len(), MAX_SPAN_RANK as u64));
    }
    let total = (1usize << rows.len()) - 1;
    let mut out = Vec::with_capacity(total);
    let mut acc = 0u64;
    // Gray code: step i flips row trailing_zeros(i).
    for i in 1..=total {
        acc ^= rows[i.trailing_zeros() as usize];
        out.push(acc);
    }
    out.sort_unstable();
    Ok(out)
}

/// All `2^rank - 1` nonzero vectors in the span, in increasing id order.
pub fn gf2_span_nonzero(basis: &Gf2Rref) -> Result<Vec<Gf2Vec>> {
    let width = basis.width;
    Ok(span_nonzero_bits(&basis.rows)?
        .into_iter()
        .map(|bits| Gf2Vec { width, bits })
        .collect())
}

/// Serde adapter writing a `u64` as a lowercase hex string.
pub mod hex_id {
    use super::*;

    pub fn serialize<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{v:x}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<u64, D::Error> {
        let s = String::deserialize(d)?;
        u64::from_str_radix(&s, 16).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a `Vec<u64>` as an array of lowercase hex strings.
pub mod hex_ids {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[u64], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| format!("{x:x}")))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<u64>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| u64::from_str_radix(s, 16).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// A vector set on the wire: `{"width": n, "vectors": ["hex", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorSet {
    pub width: u32,
    #[serde(with = "hex_ids")]
    pub vectors: Vec<u64>,
}

impl VectorSet {
    pub fn from_vectors(width: u32, vectors: &[Gf2Vec]) -> Result<Self> {
        check_width(width)?;
        if let Some(w) = common_width(vectors)? {
            if w != width {
                return Err(Error::WidthMismatch(width, w));
            }
        }
        Ok(Self {
            width,
            vectors: vectors.iter().map(|v| v.bits).collect(),
        })
    }

    pub fn to_vectors(&self) -> Result<Vec<Gf2Vec>> {
        self.vectors.iter().map(|&b| Gf2Vec::new(self.width, b)).collect()
    }
}
