use serde::{Deserialize, Serialize};

use super::{verify_decomposition, DecompParams, Partition, TransversalState};
use crate::error::{Error, Result};
use crate::matroid::{IndexedMatroid, Matroid};

/// Largest ground set the exhaustive searcher accepts.
pub const SEARCH_LIMIT: u64 = 16;

/// Default cap on placement attempts.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    /// A verified (b,c)-decomposition.
    Found { parts: Vec<Vec<u64>> },
    /// The whole search space was explored; none exists.
    Nonexistent,
    /// The budget ran out first. Says nothing about existence.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub params: DecompParams,
    #[serde(flatten)]
    pub outcome: SearchOutcome,
    /// Placement attempts made.
    pub nodes: u64,
}

enum Step {
    Found,
    Dead,
    Exhausted,
}

struct Searcher<'a> {
    m: &'a Matroid,
    im: &'a IndexedMatroid,
    b: usize,
    limit: usize,
    budget: u64,
    nodes: u64,
    parts: Vec<Vec<usize>>,
}

impl Searcher<'_> {
    /// Assigns elements `i..` in id order. Element `i` goes to an existing
    /// part or opens the next one, so every set partition appears exactly
    /// once (first-occurrence order of part labels).
    fn place(&mut self, i: usize) -> Step {
        if i == self.im.len() {
            return Step::Found;
        }
        for j in 0..=self.parts.len() {
            let fresh = j == self.parts.len();
            if !fresh && self.parts[j].len() >= self.limit {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Exhausted;
            }
            if fresh {
                self.parts.push(Vec::new());
            }
            self.parts[j].push(i);
            if self.new_transversals_ok(i, j) {
                match self.place(i + 1) {
                    Step::Dead => {}
                    done => return done,
                }
            }
            self.parts[j].pop();
            if fresh {
                self.parts.pop();
            }
        }
        Step::Dead
    }

    /// Every selection of one element per current part that uses `i`
    /// from part `j` must be b-colorable. Parts only grow, so any such
    /// selection survives into the final partition as part of a
    /// transversal; the first failure prunes the branch.
    fn new_transversals_ok(&self, i: usize, j: usize) -> bool {
        let mut state = TransversalState::new(self.m, self.im, self.b);
        if !state.push(self.im, i) {
            return false;
        }
        let others: Vec<&[usize]> = self
            .parts
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != j)
            .map(|(_, p)| p.as_slice())
            .collect();
        all_colorable(self.im, &others, &state)
    }
}

fn all_colorable(im: &IndexedMatroid, parts: &[&[usize]], state: &TransversalState<'_>) -> bool {
    let Some((first, rest)) = parts.split_first() else {
        return true;
    };
    first.iter().all(|&e| {
        let mut next = state.clone();
        next.push(im, e) && all_colorable(im, rest, &next)
    })
}

/// Exhaustive branch-and-bound search for a (b,c)-decomposition of `m`.
///
/// Single-threaded with a fixed branch order, so the partition returned
/// (if any) and the node count are reproducible.
pub fn search_decomposition(m: &Matroid, b: usize, c: usize, budget: u64) -> Result<SearchReport> {
    if m.ground_len() > SEARCH_LIMIT {
        return Err(Error::refused(
            "ground set for decomposition search",
            m.ground_len(),
            SEARCH_LIMIT,
        ));
    }
    let params = DecompParams::new(m, b, c)?;
    let im = m.indexed()?;
    let mut searcher = Searcher {
        m,
        im: &im,
        b,
        limit: params.part_limit(),
        budget,
        nodes: 0,
        parts: Vec::new(),
    };
    let outcome = match searcher.place(0) {
        Step::Found => {
            let parts: Vec<Vec<u64>> = searcher
                .parts
                .iter()
                .map(|p| p.iter().map(|&i| im.element(i)).collect())
                .collect();
            let partition = Partition::new(m.clone(), parts.clone())?;
            let check = verify_decomposition(&partition, b, c)?;
            if !check.verdict.is_valid() {
                return Err(Error::Invalid(format!(
                    "search produced a partition that fails verification: {:?}",
                    check.verdict
                )));
            }
            SearchOutcome::Found { parts }
        }
        Step::Dead => SearchOutcome::Nonexistent,
        Step::Exhausted => SearchOutcome::Exhausted,
    };
    Ok(SearchReport {
        params,
        outcome,
        nodes: searcher.nodes,
    })
}
