//! Exact matroid coloring.
//!
//! Two independent routes to the coloring number:
//!
//! - the density characterization, `max ⌈|R| / r(R)⌉` over nonempty `R`,
//!   evaluated exhaustively or over flats only;
//! - a constructive partitioner that grows a `k`-coloring one element at a
//!   time along shortest exchange paths (matroid union augmentation).

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{restrict, IndexedMatroid, Matroid, EXHAUSTIVE_LIMIT};

/// A partition of the ground set into `k` independent classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub classes: Vec<Vec<u64>>,
}

impl Coloring {
    /// Checks that the classes are independent and partition the ground set.
    pub fn validate(&self, m: &Matroid) -> Result<()> {
        if self.k != self.classes.len() {
            return Err(Error::Invalid(format!(
                "coloring declares k = {} but has {} classes",
                self.k,
                self.classes.len()
            )));
        }
        let all: Vec<u64> = self.classes.iter().flatten().copied().collect();
        let all = m.normalize(&all)?;
        if all != m.ground_elements()? {
            return Err(Error::Invalid("coloring does not cover the ground set".into()));
        }
        for (i, class) in self.classes.iter().enumerate() {
            if !m.is_independent(class)? {
                return Err(Error::Invalid(format!("color class {i} is dependent")));
            }
        }
        Ok(())
    }
}

fn reject_loops(m: &Matroid) -> Result<()> {
    match m.find_loop()? {
        Some(e) => Err(Error::Loop(e)),
        None => Ok(()),
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn exhaustive_view(m: &Matroid) -> Result<IndexedMatroid> {
    if m.ground_len() > EXHAUSTIVE_LIMIT as u64 {
        return Err(Error::refused(
            "ground set for exhaustive subset scan",
            m.ground_len(),
            EXHAUSTIVE_LIMIT as u64,
        ));
    }
    m.indexed()
}

fn density_max(im: &IndexedMatroid) -> usize {
    let len = im.len();
    if len == 0 {
        return 0;
    }
    (1usize..1 << len)
        .into_par_iter()
        .with_min_len(1 << 10)
        .map(|mask| ceil_div(mask.count_ones() as usize, im.rank_mask(mask as u64)))
        .max()
        .unwrap_or(0)
}

/// Coloring number by `max ⌈|R| / r(R)⌉` over every nonempty subset.
///
/// Refuses ground sets above [`EXHAUSTIVE_LIMIT`] elements rather than
/// sampling, so the value returned is always exact.
pub fn coloring_number_density(m: &Matroid) -> Result<usize> {
    reject_loops(m)?;
    Ok(density_max(&exhaustive_view(m)?))
}

/// Largest ground set for [`coloring_number_density_flats`].
pub const FLAT_SCAN_LIMIT: u64 = 64;

/// Flats of a matroid with at most 64 elements, as index masks, with ranks.
fn all_flats(im: &IndexedMatroid) -> Vec<(u64, usize)> {
    let len = im.len();
    let bottom = im.closure_mask(0);
    let mut seen: HashSet<u64> = HashSet::from([bottom]);
    let mut layer = vec![bottom];
    let mut out = vec![(bottom, 0)];
    let mut rank = 0;
    while !layer.is_empty() {
        rank += 1;
        let mut next = Vec::new();
        for &f in &layer {
            for e in 0..len {
                if f >> e & 1 == 0 {
                    let g = im.closure_mask(f | 1 << e);
                    if seen.insert(g) {
                        next.push(g);
                    }
                }
            }
        }
        next.sort_unstable();
        out.extend(next.iter().map(|&g| (g, rank)));
        layer = next;
    }
    out
}

/// Density maximum taken over flats only.
///
/// Closing a set keeps its rank and can only add elements, so the maximum
/// over all subsets is attained at a flat.
pub fn coloring_number_density_flats(m: &Matroid) -> Result<usize> {
    reject_loops(m)?;
    if m.ground_len() > FLAT_SCAN_LIMIT {
        return Err(Error::refused(
            "ground set for flat scan",
            m.ground_len(),
            FLAT_SCAN_LIMIT,
        ));
    }
    let im = m.indexed()?;
    Ok(all_flats(&im)
        .into_iter()
        .filter(|&(_, r)| r > 0)
        .map(|(f, r)| ceil_div(f.count_ones() as usize, r))
        .max()
        .unwrap_or(0))
}

/// A partial coloring grown by matroid-union augmentation.
#[derive(Debug, Clone)]
pub(crate) struct UnionColoring<'a> {
    m: &'a IndexedMatroid,
    classes: Vec<Vec<usize>>,
    owner: Vec<Option<usize>>,
}

impl<'a> UnionColoring<'a> {
    pub fn new(m: &'a IndexedMatroid, k: usize) -> Self {
        Self {
            m,
            classes: vec![Vec::new(); k],
            owner: vec![None; m.len()],
        }
    }

    /// Adds index `s`, re-coloring along a shortest exchange path.
    /// Returns false (leaving the state unchanged) when no path exists,
    /// i.e. the colored set plus `s` is not `k`-colorable.
    pub fn insert(&mut self, s: usize) -> bool {
        debug_assert!(self.owner[s].is_none());
        let len = self.m.len();
        let mut parent: Vec<Option<usize>> = vec![None; len];
        let mut visited = vec![false; len];
        let mut queue = VecDeque::from([s]);
        visited[s] = true;
        while let Some(x) = queue.pop_front() {
            for j in 0..self.classes.len() {
                if self.owner[x] == Some(j) {
                    continue;
                }
                match self.m.circuit(&self.classes[j], x) {
                    None => {
                        self.augment(x, j, &parent);
                        return true;
                    }
                    Some(ys) => {
                        for y in ys {
                            if !visited[y] {
                                visited[y] = true;
                                parent[y] = Some(x);
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn augment(&mut self, sink: usize, free_class: usize, parent: &[Option<usize>]) {
        // Walk back to the source: each node takes the class of its successor.
        let mut moves = vec![(sink, free_class)];
        let mut node = sink;
        while let Some(prev) = parent[node] {
            let class = self.owner[node].expect("path nodes other than the source are colored");
            moves.push((prev, class));
            node = prev;
        }
        for &(x, _) in &moves {
            if let Some(c) = self.owner[x] {
                self.classes[c].retain(|&y| y != x);
            }
        }
        for &(x, c) in &moves {
            self.owner[x] = Some(c);
            self.classes[c].push(x);
        }
        debug_assert!(self
            .classes
            .iter()
            .all(|c| self.m.rank_iter(c.iter().copied()) == c.len()));
    }

    pub fn into_coloring(self) -> Coloring {
        let classes: Vec<Vec<u64>> = self
            .classes
            .into_iter()
            .map(|c| {
                let mut ids: Vec<u64> = c.into_iter().map(|i| self.m.element(i)).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        Coloring {
            k: classes.len(),
            classes,
        }
    }
}

/// A `k`-coloring of `m`, or `None` when `m` needs more than `k` colors.
///
/// Elements are inserted in increasing id order; exchange-path ties go to
/// the smallest element id and lowest class index, so the output is
/// deterministic.
pub fn color(m: &Matroid, k: usize) -> Result<Option<Coloring>> {
    if k == 0 {
        return Err(Error::Invalid("number of colors must be at least 1".into()));
    }
    reject_loops(m)?;
    let im = m.indexed()?;
    let mut state = UnionColoring::new(&im, k);
    for i in 0..im.len() {
        if !state.insert(i) {
            return Ok(None);
        }
    }
    let coloring = state.into_coloring();
    coloring.validate(m)?;
    Ok(Some(coloring))
}

/// Smallest `k` admitting a coloring, searched upward from `⌈|S| / r(S)⌉`.
pub fn coloring_number(m: &Matroid) -> Result<usize> {
    Ok(optimal_coloring(m)?.map_or(0, |c| c.k))
}

/// An optimal coloring; `None` only for the empty ground set.
pub fn optimal_coloring(m: &Matroid) -> Result<Option<Coloring>> {
    reject_loops(m)?;
    let size = m.ground_len() as usize;
    if size == 0 {
        return Ok(None);
    }
    let mut k = ceil_div(size, m.ground_rank()?);
    loop {
        if let Some(c) = color(m, k)? {
            return Ok(Some(c));
        }
        k += 1;
    }
}

fn check_small(m: &Matroid, y: &[u64]) -> Result<Vec<u64>> {
    let y = m.normalize(y)?;
    if y.len() > EXHAUSTIVE_LIMIT {
        return Err(Error::refused(
            "set for b-colorability",
            y.len(),
            EXHAUSTIVE_LIMIT as u64,
        ));
    }
    Ok(y)
}

/// Whether `y` splits into `b` independent sets, by the density test on
/// the restriction to `y`.
pub fn is_b_colorable(m: &Matroid, y: &[u64], b: usize) -> Result<bool> {
    let y = check_small(m, y)?;
    let r = restrict(m, &y)?;
    reject_loops(&r)?;
    if y.is_empty() {
        return Ok(true);
    }
    let im = r.indexed()?;
    let len = im.len();
    // Any subset R with |R| > b·r(R) is a certificate of failure.
    let fails = (1usize..1 << len)
        .into_par_iter()
        .with_min_len(1 << 10)
        .any(|mask| mask.count_ones() as usize > b * im.rank_mask(mask as u64));
    Ok(!fails)
}

/// Same predicate as [`is_b_colorable`], decided constructively.
pub fn is_b_colorable_constructive(m: &Matroid, y: &[u64], b: usize) -> Result<bool> {
    let y = m.normalize(y)?;
    let r = restrict(m, &y)?;
    reject_loops(&r)?;
    if y.is_empty() {
        return Ok(true);
    }
    if b == 0 {
        return Ok(false);
    }
    let im = r.indexed()?;
    let mut state = UnionColoring::new(&im, b);
    Ok((0..im.len()).all(|i| state.insert(i)))
}
