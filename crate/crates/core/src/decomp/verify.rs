use num_bigint::BigUint;
use rayon::prelude::*;

use super::{
    DecompParams, DecompReport, Partition, Stats, TransversalState, Verdict, DEFAULT_TRANSVERSAL_BUDGET, MAX_PARTS,
};
use crate::coloring::{is_b_colorable, is_b_colorable_constructive};
use crate::error::{Error, Result};
use crate::matroid::{IndexedMatroid, Matroid, EXHAUSTIVE_LIMIT};

/// Checks Definition-style validity of `p` as a (b,c)-decomposition.
///
/// Only full transversals are examined: b-colorability is hereditary, so a
/// selection meeting each part at most once is b-colorable whenever any
/// full transversal containing it is.
pub fn verify_decomposition(p: &Partition, b: usize, c: usize) -> Result<DecompReport> {
    verify_decomposition_with_budget(p, b, c, DEFAULT_TRANSVERSAL_BUDGET)
}

pub fn verify_decomposition_with_budget(p: &Partition, b: usize, c: usize, budget: u64) -> Result<DecompReport> {
    let params = DecompParams::new(p.matroid(), b, c)?;
    let limit = params.part_limit();
    if let Some((i, part)) = p.parts().iter().enumerate().find(|(_, x)| x.len() > limit) {
        return Ok(DecompReport {
            params,
            verdict: Verdict::SizeViolation {
                part: i,
                size: part.len(),
                limit,
            },
            stats: Stats::default(),
        });
    }
    if p.len() > MAX_PARTS {
        return Err(Error::refused("number of parts", p.len(), MAX_PARTS as u64));
    }
    let total = p.transversal_count();
    if total > BigUint::from(budget) {
        return Err(Error::refused("transversal count", total, budget));
    }
    let total: u64 = total.try_into().expect("bounded by budget");

    let im = p.matroid().indexed()?;
    let parts = p.indexed_parts(&im);
    let found = first_failing_transversal(p.matroid(), &im, &parts, b);
    let (verdict, checked) = match found {
        None => (Verdict::Valid, total),
        Some(positions) => {
            let transversal = positions
                .iter()
                .zip(&parts)
                .map(|(&pos, part)| im.element(part[pos]))
                .collect();
            (
                Verdict::WitnessTransversal { transversal },
                lex_index(&positions, &parts) + 1,
            )
        }
    };
    Ok(DecompReport {
        params,
        verdict,
        stats: Stats {
            transversals_checked: checked,
            flats_scanned: 0,
        },
    })
}

/// Position of a transversal in the odometer order with part 0 most
/// significant.
fn lex_index(positions: &[usize], parts: &[Vec<usize>]) -> u64 {
    positions
        .iter()
        .zip(parts)
        .fold(0u64, |acc, (&pos, part)| acc * part.len() as u64 + pos as u64)
}

/// Positions (one per part) of the lexicographically first transversal that
/// is not b-colorable. Sharded on the first part; `find_map_first` keeps
/// the answer independent of the worker count.
fn first_failing_transversal(m: &Matroid, im: &IndexedMatroid, parts: &[Vec<usize>], b: usize) -> Option<Vec<usize>> {
    if parts.is_empty() {
        return None;
    }
    let root = TransversalState::new(m, im, b);
    let prefix = (0..parts[0].len()).into_par_iter().find_map_first(|pos| {
        let mut state = root.clone();
        let mut chosen = vec![pos];
        if !state.push(im, parts[0][pos]) {
            return Some(chosen);
        }
        descend(im, parts, 1, &state, &mut chosen).then_some(chosen)
    })?;
    // Every completion of a failing prefix fails; the smallest takes the
    // first element of each remaining part.
    let mut positions = prefix;
    positions.resize(parts.len(), 0);
    Some(positions)
}

/// Depth-first search for a failing prefix; leaves it in `chosen`.
fn descend(
    im: &IndexedMatroid,
    parts: &[Vec<usize>],
    depth: usize,
    state: &TransversalState<'_>,
    chosen: &mut Vec<usize>,
) -> bool {
    if depth == parts.len() {
        return false;
    }
    for (pos, &e) in parts[depth].iter().enumerate() {
        let mut next = state.clone();
        chosen.push(pos);
        if !next.push(im, e) || descend(im, parts, depth + 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// b-colorability by the density test when small enough, otherwise
/// constructively.
pub(super) fn colorable(m: &Matroid, y: &[u64], b: usize) -> Result<bool> {
    if y.len() <= EXHAUSTIVE_LIMIT {
        is_b_colorable(m, y, b)
    } else {
        is_b_colorable_constructive(m, y, b)
    }
}

/// Re-derives a report's claim from the partition alone.
///
/// Witnesses are checked directly through closure and b-colorability;
/// `Valid` is re-verified from scratch.
pub fn replay_certificate(p: &Partition, report: &DecompReport) -> Result<bool> {
    let DecompParams { b, c, k } = report.params;
    let fresh = DecompParams::new(p.matroid(), b, c)?;
    if fresh.k != k {
        return Ok(false);
    }
    match &report.verdict {
        Verdict::Valid => Ok(verify_decomposition(p, b, c)?.verdict.is_valid()),
        Verdict::SizeViolation { part, size, limit } => Ok(p
            .parts()
            .get(*part)
            .is_some_and(|x| x.len() == *size && *size > *limit && *limit == fresh.part_limit())),
        Verdict::WitnessTransversal { transversal } => {
            if transversal.len() != p.len() {
                return Ok(false);
            }
            let one_per_part = transversal.iter().enumerate().all(|(i, &e)| p.part_of(e) == Some(i));
            Ok(one_per_part && !colorable(p.matroid(), transversal, b)?)
        }
        Verdict::WitnessFlat { flat } => {
            let m = p.matroid();
            if m.binary_dimension() != Some(flat.n()) {
                return Ok(false);
            }
            let elements = flat.elements()?;
            let mut parts: Vec<usize> = elements.iter().filter_map(|&e| p.part_of(e)).collect();
            parts.sort_unstable();
            parts.dedup();
            Ok(m.is_flat(&elements)? && parts.len() == elements.len() && !colorable(m, &elements, b)?)
        }
    }
}
