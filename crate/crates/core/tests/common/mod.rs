//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; it works from the definitions.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

/// Rank of a set of GF(2) vectors by plain elimination.
pub fn rank_bits(vs: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vs {
        let mut v = v;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
        }
    }
    basis.len()
}

fn subsets(ys: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    (1u64..1 << ys.len()).map(move |mask| {
        ys.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &y)| y)
            .collect()
    })
}

/// `max ⌈|R| / r(R)⌉` over nonempty subsets of a loop-free vector set.
pub fn density_number(ys: &[u64]) -> usize {
    subsets(ys).map(|r| r.len().div_ceil(rank_bits(&r))).max().unwrap_or(0)
}

/// Whether some assignment of `b` colors makes every class independent.
/// Falls back to the density test once `b^|ys|` gets large.
pub fn colorable_by_assignment(ys: &[u64], b: usize) -> bool {
    if (ys.len() as f64) * (b as f64).log2() > 18.0 {
        return subsets(ys).all(|r| r.len() <= b * rank_bits(&r));
    }
    let mut colors = vec![0usize; ys.len()];
    loop {
        let ok = (0..b).all(|j| {
            let class: Vec<u64> = ys
                .iter()
                .zip(&colors)
                .filter(|(_, &c)| c == j)
                .map(|(&y, _)| y)
                .collect();
            rank_bits(&class) == class.len()
        });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == colors.len() {
                return false;
            }
            colors[i] += 1;
            if colors[i] < b {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// All set partitions of `ground`, as restricted-growth strings in
/// lexicographic order; parts appear in first-occurrence order.
pub fn set_partitions(ground: &[u64]) -> Vec<Vec<Vec<u64>>> {
    fn go(ground: &[u64], i: usize, parts: &mut Vec<Vec<u64>>, out: &mut Vec<Vec<Vec<u64>>>) {
        if i == ground.len() {
            out.push(parts.clone());
            return;
        }
        for j in 0..=parts.len() {
            if j == parts.len() {
                parts.push(Vec::new());
            }
            parts[j].push(ground[i]);
            go(ground, i + 1, parts, out);
            parts[j].pop();
            if parts[j].is_empty() {
                parts.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(ground, 0, &mut Vec::new(), &mut out);
    out
}

/// Every transversal of `parts`, one element per part.
pub fn transversals(parts: &[Vec<u64>]) -> Vec<Vec<u64>> {
    parts.iter().fold(vec![Vec::new()], |acc, part| {
        acc.iter()
            .flat_map(|t| {
                part.iter().map(move |&e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                })
            })
            .collect()
    })
}

/// The definition of a (b,c)-decomposition for binary vector sets.
pub fn naive_valid(parts: &[Vec<u64>], b: usize, limit: usize) -> bool {
    parts.iter().all(|p| p.len() <= limit) && transversals(parts).iter().all(|t| colorable_by_assignment(t, b))
}

/// Nonzero vectors of GF(2)^n.
pub fn binary_ground(n: u32) -> Vec<u64> {
    (1..1u64 << n).collect()
}

/// A random partition with parts of at most `cap` elements: shuffle, then
/// cut into runs of random length.
pub fn random_partition(rng: &mut impl Rng, ground: &[u64], cap: usize) -> Vec<Vec<u64>> {
    let mut elems = ground.to_vec();
    elems.shuffle(rng);
    let mut parts = Vec::new();
    let mut rest = &elems[..];
    while !rest.is_empty() {
        let len = rng.gen_range(1..=cap.min(rest.len()));
        parts.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    parts
}

/// `∏_{i=1}^{d} (2^n - 2^{i-1}) / (2^d - 2^{i-1})` for small `n`.
pub fn product_formula(n: u32, d: u32) -> u128 {
    let (mut num, mut den) = (1u128, 1u128);
    for i in 1..=d {
        num *= (1u128 << n) - (1u128 << (i - 1));
        den *= (1u128 << d) - (1u128 << (i - 1));
    }
    num / den
}

/// Subspace spanned by `gens`, zero excluded, sorted.
pub fn span(gens: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64];
    for &g in gens {
        if !out.contains(&g) {
            let shifted: Vec<u64> = out.iter().map(|&x| x ^ g).collect();
            out.extend(shifted);
        }
    }
    out.retain(|&x| x != 0);
    out.sort_unstable();
    out
}

/// Whether two elements of `flat` share a part.
pub fn is_covered(flat: &[u64], parts: &[Vec<u64>]) -> bool {
    parts.iter().any(|p| flat.iter().filter(|e| p.contains(e)).count() >= 2)
}
