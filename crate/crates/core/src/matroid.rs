//! Matroids presented through a rank oracle.
//!
//! Every constructor reduces to one of three rank rules over element ids:
//! linear (the id is a GF(2) vector), partition with capacity one, or
//! uniform. Restrictions keep the parent's rule and shrink the ground set.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{self, rank_of_bits, XorBasis, MAX_SPAN_RANK};

/// Largest ground set any exhaustive subset scan will touch.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Largest ground set that will be materialized as an element list.
pub const MATERIALIZE_LIMIT: u64 = 1 << MAX_SPAN_RANK;

/// Matroid file format.
///
/// ```json
/// {"kind":"binary","n":4}
/// {"kind":"partition","classes":[[1,2],[3]]}
/// {"kind":"uniform","size":5,"rank":2}
/// {"kind":"restriction","parent":{"kind":"binary","n":3},"subset":[1,2,3]}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Binary { n: u32 },
    Partition { classes: Vec<Vec<u64>> },
    Uniform { size: u64, rank: u64 },
    Restriction { parent: Box<MatroidSpec>, subset: Vec<u64> },
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSpec::Binary { n } => binary_matroid(*n),
            MatroidSpec::Partition { classes } => partition_matroid(classes.clone()),
            MatroidSpec::Uniform { size, rank } => uniform_matroid(*size, *rank),
            MatroidSpec::Restriction { parent, subset } => restrict(&parent.build()?, subset),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ground {
    /// `start..end`
    Range { start: u64, end: u64 },
    /// Sorted, no duplicates.
    Explicit(Arc<Vec<u64>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Rule {
    /// Element id is its own GF(2) vector of the given width.
    Linear {
        width: u32,
    },
    /// Element id to class index.
    Partition(Arc<BTreeMap<u64, u32>>),
    Uniform {
        rank: usize,
    },
}

/// A matroid on a finite ground set of integer element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    spec: MatroidSpec,
    ground: Ground,
    rule: Rule,
}

/// The binary matroid of all nonzero vectors in GF(2)^n.
pub fn binary_matroid(n: u32) -> Result<Matroid> {
    if !(2..=gf2::MAX_WIDTH).contains(&n) {
        return Err(Error::DimensionOutOfRange(n));
    }
    Ok(Matroid {
        spec: MatroidSpec::Binary { n },
        ground: Ground::Range { start: 1, end: 1 << n },
        rule: Rule::Linear { width: n },
    })
}

/// Partition matroid with capacity one per class.
pub fn partition_matroid(classes: Vec<Vec<u64>>) -> Result<Matroid> {
    let mut class_of = BTreeMap::new();
    for (i, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::Invalid(format!("partition class {i} is empty")));
        }
        for &e in class {
            if class_of.insert(e, i as u32).is_some() {
                return Err(Error::Invalid(format!("element {e} appears in more than one class")));
            }
        }
    }
    let ground: Vec<u64> = class_of.keys().copied().collect();
    Ok(Matroid {
        spec: MatroidSpec::Partition { classes },
        ground: Ground::Explicit(Arc::new(ground)),
        rule: Rule::Partition(Arc::new(class_of)),
    })
}

/// Uniform matroid `U(rank, size)` on elements `0..size`.
pub fn uniform_matroid(size: u64, rank: u64) -> Result<Matroid> {
    if rank > size {
        return Err(Error::Invalid(format!("uniform rank {rank} exceeds size {size}")));
    }
    Ok(Matroid {
        spec: MatroidSpec::Uniform { size, rank },
        ground: Ground::Range { start: 0, end: size },
        rule: Rule::Uniform { rank: rank as usize },
    })
}

/// Restriction of `m` to `subset`.
pub fn restrict(m: &Matroid, subset: &[u64]) -> Result<Matroid> {
    let elements = m.normalize(subset)?;
    Ok(Matroid {
        spec: MatroidSpec::Restriction {
            parent: Box::new(m.spec.clone()),
            subset: elements.clone(),
        },
        ground: Ground::Explicit(Arc::new(elements)),
        rule: m.rule.clone(),
    })
}

impl Matroid {
    pub fn spec(&self) -> &MatroidSpec {
        &self.spec
    }

    /// `Some(n)` when this is the full binary matroid of dimension `n`.
    pub fn binary_dimension(&self) -> Option<u32> {
        match self.spec {
            MatroidSpec::Binary { n } => Some(n),
            _ => None,
        }
    }

    /// Ambient width when the rank rule is GF(2)-linear.
    pub fn linear_width(&self) -> Option<u32> {
        match self.rule {
            Rule::Linear { width } => Some(width),
            _ => None,
        }
    }

    pub fn ground_len(&self) -> u64 {
        match &self.ground {
            Ground::Range { start, end } => end - start,
            Ground::Explicit(v) => v.len() as u64,
        }
    }

    pub fn contains(&self, e: u64) -> bool {
        match &self.ground {
            Ground::Range { start, end } => (*start..*end).contains(&e),
            Ground::Explicit(v) => v.binary_search(&e).is_ok(),
        }
    }

    /// Ground set in increasing id order; refused above [`MATERIALIZE_LIMIT`].
    pub fn ground_elements(&self) -> Result<Vec<u64>> {
        match &self.ground {
            Ground::Range { start, end } => {
                if end - start > MATERIALIZE_LIMIT {
                    return Err(Error::refused("ground set size", end - start, MATERIALIZE_LIMIT));
                }
                Ok((*start..*end).collect())
            }
            Ground::Explicit(v) => Ok(v.as_ref().clone()),
        }
    }

    /// Sorted copy of `x` after checking membership and duplicates.
    pub fn normalize(&self, x: &[u64]) -> Result<Vec<u64>> {
        let mut v = x.to_vec();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateElement(w[0]));
            }
        }
        if let Some(&e) = v.iter().find(|&&e| !self.contains(e)) {
            return Err(Error::ForeignElement(e));
        }
        Ok(v)
    }

    /// Rank of `x`, which must be a subset of the ground set.
    pub fn rank(&self, x: &[u64]) -> Result<usize> {
        let x = self.normalize(x)?;
        Ok(self.rule.rank_of_ids(&x))
    }

    pub fn ground_rank(&self) -> Result<usize> {
        match (&self.ground, &self.rule) {
            (Ground::Range { start, end }, Rule::Linear { width }) if *start == 1 && *end == 1 << width => {
                Ok(*width as usize)
            }
            (Ground::Range { start, end }, Rule::Uniform { rank }) => Ok((*rank).min((end - start) as usize)),
            _ => Ok(self.rule.rank_of_ids(&self.ground_elements()?)),
        }
    }

    pub fn is_independent(&self, x: &[u64]) -> Result<bool> {
        Ok(self.rank(x)? == x.len())
    }

    /// Smallest flat containing `x`, sorted.
    pub fn closure(&self, x: &[u64]) -> Result<Vec<u64>> {
        let x = self.normalize(x)?;
        match &self.rule {
            Rule::Linear { width } => match &self.ground {
                // The full binary ground set: the closure is the span minus zero.
                Ground::Range { .. } => {
                    let rref = gf2::rref_of_bits(*width, x.iter().copied());
                    gf2::span_nonzero_bits(rref.rows())
                }
                Ground::Explicit(g) => {
                    let mut basis = XorBasis::new();
                    for &e in &x {
                        basis.insert(e);
                    }
                    Ok(g.iter().copied().filter(|&e| basis.contains(e)).collect())
                }
            },
            Rule::Partition(class_of) => {
                let touched: Vec<u32> = x.iter().map(|e| class_of[e]).collect();
                Ok(self
                    .ground_elements()?
                    .into_iter()
                    .filter(|e| touched.contains(&class_of[e]))
                    .collect())
            }
            Rule::Uniform { rank } => {
                if x.len() >= *rank {
                    self.ground_elements()
                } else {
                    Ok(x)
                }
            }
        }
    }

    pub fn is_flat(&self, x: &[u64]) -> Result<bool> {
        let sorted = self.normalize(x)?;
        Ok(self.closure(&sorted)? == sorted)
    }

    /// First element whose singleton has rank zero.
    pub fn find_loop(&self) -> Result<Option<u64>> {
        match &self.rule {
            Rule::Linear { .. } | Rule::Partition(_) => Ok(None),
            Rule::Uniform { rank } => {
                if *rank > 0 {
                    return Ok(None);
                }
                Ok(match &self.ground {
                    Ground::Range { start, end } => (start < end).then_some(*start),
                    Ground::Explicit(v) => v.first().copied(),
                })
            }
        }
    }

    pub(crate) fn indexed(&self) -> Result<IndexedMatroid> {
        let elements = self.ground_elements()?;
        Ok(IndexedMatroid::new(elements, self.rule.clone()))
    }
}

impl Rule {
    fn rank_of_ids(&self, ids: &[u64]) -> usize {
        match self {
            Rule::Linear { .. } => rank_of_bits(ids.iter().copied()),
            Rule::Partition(class_of) => {
                let mut classes: Vec<u32> = ids.iter().map(|e| class_of[e]).collect();
                classes.sort_unstable();
                classes.dedup();
                classes.len()
            }
            Rule::Uniform { rank } => ids.len().min(*rank),
        }
    }
}

/// Per-index view of a materialized ground set, for the hot loops in
/// coloring and decomposition checks.
#[derive(Debug, Clone)]
pub(crate) struct IndexedMatroid {
    elements: Vec<u64>,
    data: IndexData,
}

#[derive(Debug, Clone)]
enum IndexData {
    Linear,
    Partition(Vec<u32>),
    Uniform(usize),
}

impl IndexedMatroid {
    fn new(elements: Vec<u64>, rule: Rule) -> Self {
        let data = match rule {
            Rule::Linear { .. } => IndexData::Linear,
            Rule::Partition(class_of) => IndexData::Partition(elements.iter().map(|e| class_of[e]).collect()),
            Rule::Uniform { rank } => IndexData::Uniform(rank),
        };
        Self { elements, data }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> u64 {
        self.elements[i]
    }

    pub fn index_of(&self, e: u64) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }

    pub fn rank_iter(&self, idx: impl IntoIterator<Item = usize>) -> usize {
        match &self.data {
            IndexData::Linear => rank_of_bits(idx.into_iter().map(|i| self.elements[i])),
            IndexData::Partition(class) => {
                let mut seen: Vec<u32> = idx.into_iter().map(|i| class[i]).collect();
                seen.sort_unstable();
                seen.dedup();
                seen.len()
            }
            IndexData::Uniform(r) => idx.into_iter().count().min(*r),
        }
    }

    /// Rank of the subset whose bit `i` selects index `i` (needs `len() <= 64`).
    pub fn rank_mask(&self, mask: u64) -> usize {
        debug_assert!(self.len() <= 64);
        match &self.data {
            IndexData::Linear => {
                let mut b = XorBasis::new();
                let mut m = mask;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    b.insert(self.elements[i]);
                }
                b.rank()
            }
            IndexData::Partition(class) => {
                let mut seen: Vec<u32> = Vec::with_capacity(mask.count_ones() as usize);
                let mut m = mask;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    seen.push(class[i]);
                }
                seen.sort_unstable();
                seen.dedup();
                seen.len()
            }
            IndexData::Uniform(r) => (mask.count_ones() as usize).min(*r),
        }
    }

    /// Closure of a subset given as an index mask (needs `len() <= 64`).
    pub fn closure_mask(&self, mask: u64) -> u64 {
        match &self.data {
            IndexData::Linear => {
                let mut b = XorBasis::new();
                let mut m = mask;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    b.insert(self.elements[i]);
                }
                (0..self.len())
                    .filter(|&i| b.contains(self.elements[i]))
                    .fold(0, |acc, i| acc | 1 << i)
            }
            _ => {
                let r = self.rank_mask(mask);
                (0..self.len())
                    .filter(|&i| mask >> i & 1 == 1 || self.rank_mask(mask | 1 << i) == r)
                    .fold(0, |acc, i| acc | 1 << i)
            }
        }
    }

    /// With `class` independent: `None` if `class + x` stays independent,
    /// otherwise the members `y` of `class` for which `class - y + x` is
    /// independent (the fundamental circuit of `x`, minus `x`).
    pub fn circuit(&self, class: &[usize], x: usize) -> Option<Vec<usize>> {
        match &self.data {
            IndexData::Linear => {
                // Echelon rows tagged with which class positions they combine.
                let mut rows: [(u64, u64); 64] = [(0, 0); 64];
                for (pos, &i) in class.iter().enumerate() {
                    let (mut v, mut tag) = (self.elements[i], 1u64 << pos);
                    while v != 0 {
                        let p = v.trailing_zeros() as usize;
                        if rows[p].0 == 0 {
                            rows[p] = (v, tag);
                            break;
                        }
                        v ^= rows[p].0;
                        tag ^= rows[p].1;
                    }
                    debug_assert!(v != 0, "class is not independent");
                }
                let (mut v, mut tag) = (self.elements[x], 0u64);
                while v != 0 {
                    let p = v.trailing_zeros() as usize;
                    if rows[p].0 == 0 {
                        return None;
                    }
                    v ^= rows[p].0;
                    tag ^= rows[p].1;
                }
                let mut out: Vec<usize> = (0..class.len())
                    .filter(|pos| tag >> pos & 1 == 1)
                    .map(|pos| class[pos])
                    .collect();
                out.sort_unstable();
                Some(out)
            }
            IndexData::Partition(cls) => class.iter().find(|&&y| cls[y] == cls[x]).map(|&y| vec![y]),
            IndexData::Uniform(r) => {
                if class.len() < *r {
                    None
                } else {
                    let mut out = class.to_vec();
                    out.sort_unstable();
                    Some(out)
                }
            }
        }
    }
}
