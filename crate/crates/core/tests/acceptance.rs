//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use matroid_decomp::coloring::optimal_coloring;
use matroid_decomp::decomp::{aggregate_capacity, binomial, SearchOutcome};
use matroid_decomp::flats::flat_shards;
use matroid_decomp::{
    binary_matroid, coloring_number_density, coloring_number_density_flats, count_flats_exact, covering_report,
    enumerate_flats, find_flat_witness, flat_count_lower_bound, partition_matroid, restrict, search_decomposition,
    theorem_threshold, verify_decomposition, Partition,
};
use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

/// Coloring numbers of binary(2..=5) are 2, 3, 4, 7 by both routes.
fn ac1() -> Check {
    let want = [2usize, 3, 4, 7];
    for (n, &k) in (2..=5u32).zip(&want) {
        let m = binary_matroid(n).map_err(err)?;
        let c = optimal_coloring(&m).map_err(err)?.ok_or("empty ground")?;
        c.validate(&m).map_err(err)?;
        // Exhaustive over all subsets up to 20 elements, over flats beyond.
        let density = if m.ground_len() <= 20 {
            coloring_number_density(&m).map_err(err)?
        } else {
            coloring_number_density_flats(&m).map_err(err)?
        };
        let formula = (1usize << n).div_ceil(n as usize);
        ensure(c.k == k && density == k && formula == k, || {
            format!("n = {n}: union {}, density {density}, formula {formula}, want {k}", c.k)
        })?;
    }
    Ok("binary(2..=5) -> 2 3 4 7 by union and density".into())
}

/// Ten sampled rank-d flats per (n, d), 2 ≤ n ≤ 6, d ≤ min(n, 4), each
/// with coloring number ⌈(2^d - 1)/d⌉. Binary matroids start at n = 2.
fn ac2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0;
    for n in 2..=6u32 {
        let m = binary_matroid(n).map_err(err)?;
        for d in 1..=n.min(4) {
            let all: Vec<_> = enumerate_flats(n, d).map_err(err)?.collect();
            let picks: Vec<_> = all.choose_multiple(&mut rng, 10).collect();
            let want = ((1usize << d) - 1).div_ceil(d as usize);
            for f in picks {
                let elements = f.elements().map_err(err)?;
                let r = restrict(&m, &elements).map_err(err)?;
                let union = optimal_coloring(&r).map_err(err)?.map_or(0, |c| c.k);
                let density = coloring_number_density(&r).map_err(err)?;
                ensure(
                    union == want && density == want && density_number(&elements) == want,
                    || format!("n = {n}, d = {d}, flat {elements:?}: union {union}, density {density}, want {want}"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} sampled flats match ⌈(2^d-1)/d⌉"))
}

/// Enumerated flats equal the product formula for 1 ≤ d ≤ n ≤ 6, with no
/// repeats.
fn ac3() -> Check {
    let mut total = 0u128;
    for n in 1..=6u32 {
        for d in 1..=n {
            let mut seen = BTreeSet::new();
            for f in enumerate_flats(n, d).map_err(err)? {
                ensure(f.d() == d as usize, || format!("rank {} in the rank-{d} stream", f.d()))?;
                seen.insert(f.elements().map_err(err)?);
            }
            let want = product_formula(n, d);
            ensure(seen.len() as u128 == want, || {
                format!("n = {n}, d = {d}: {} distinct, formula {want}", seen.len())
            })?;
            ensure(count_flats_exact(n, d) == BigUint::from(want), || {
                format!("count_flats_exact({n}, {d})")
            })?;
            total += want;
        }
    }
    Ok(format!(
        "{total} flats over 21 (n, d) pairs, all distinct and counted exactly"
    ))
}

/// Count ≥ 2^(dn-d²-d) for d ≤ n/2, n ≤ 40, against an independent
/// Gaussian-binomial recurrence.
fn ac4() -> Check {
    // [n, d] = [n-1, d-1] + 2^d [n-1, d]
    let mut table = vec![vec![BigUint::one()]];
    for n in 1..=40usize {
        let prev = &table[n - 1];
        let row: Vec<BigUint> = (0..=n)
            .map(|d| {
                let a = if d >= 1 {
                    prev[d - 1].clone()
                } else {
                    BigUint::from(0u32)
                };
                let b = prev.get(d).map_or(BigUint::from(0u32), |x| x << d);
                a + b
            })
            .collect();
        table.push(row);
    }
    let mut pairs = 0;
    for n in 1..=40u32 {
        for d in 0..=n / 2 {
            let exact = count_flats_exact(n, d);
            let (nn, dd) = (u64::from(n), u64::from(d));
            let bound = BigUint::one() << (dd * nn - dd * dd - dd);
            ensure(exact == table[n as usize][d as usize], || {
                format!("count({n}, {d}) disagrees with recurrence")
            })?;
            ensure(exact >= bound, || {
                format!("count({n}, {d}) = {exact} < 2^{}", dd * nn - dd * dd - dd)
            })?;
            ensure(flat_count_lower_bound(n, d).map_err(err)? == bound, || {
                format!("bound({n}, {d})")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (n, d) pairs satisfy the bound"))
}

/// Threshold table against values evaluated by hand.
fn ac5() -> Check {
    // 4·c²·2^(d²+d) with d = 2 for b = 1 (3/2 > 1) and d = 3 for b = 2 (7/3 > 2 ≥ 3/2).
    let hand = [
        (1, 1, 2, 4 * 64u64),
        (1, 2, 2, 16 * 64),
        (2, 1, 3, 4 * 4096),
        (2, 2, 3, 16 * 4096),
    ];
    for (b, c, d, n_max) in hand {
        let t = theorem_threshold(b, c).map_err(err)?;
        ensure(t.d == d && t.n_max == BigUint::from(n_max), || {
            format!("(b, c) = ({b}, {c}): got d = {}, n_max = {}", t.d, t.n_max)
        })?;
    }
    Ok("(1,1)->256 (1,2)->1024 (2,1)->16384 (2,2)->65536".into())
}

/// Covered counts within the aggregate capacity, and valid partitions
/// leaving no uncolorable flat uncovered, over random binary(4) partitions.
fn ac6() -> Check {
    let n = 4u32;
    let k = 4u64;
    let m = binary_matroid(n).map_err(err)?;
    let ground = binary_ground(n);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut cases: Vec<(Vec<Vec<u64>>, u64)> = (0..1000)
        .map(|i| {
            let c = 1 + i % 2;
            (random_partition(&mut rng, &ground, (c * k) as usize), c)
        })
        .collect();
    // Known decompositions from the searcher, so the validity clause is exercised.
    for (b, c) in [(1usize, 2usize), (2, 1), (2, 2)] {
        if let SearchOutcome::Found { parts } = search_decomposition(&m, b, c, 1_000_000).map_err(err)?.outcome {
            cases.push((parts, c as u64));
        }
    }
    let mut valid = 0;
    for (parts, c) in &cases {
        let p = Partition::new(m.clone(), parts.clone()).map_err(err)?;
        let ell = p.len() as u64;
        let reports: Vec<_> = (1..=n)
            .map(|d| covering_report(n, d, &p))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for d in 2..=3u32 {
            let cap = aggregate_capacity(n, d, ell, *c, k);
            let hand = BigUint::from(ell)
                * binomial(&BigUint::from(c * k), 2)
                * binomial(&(BigUint::one() << n), u64::from(d - 2));
            let covered = BigUint::from(reports[d as usize - 1].covered);
            ensure(cap == hand && covered <= cap, || {
                format!("{parts:?}, d = {d}: covered {covered} > capacity {cap}")
            })?;
        }
        for b in 1..=2usize {
            if verify_decomposition(&p, b, *c as usize)
                .map_err(err)?
                .verdict
                .is_valid()
            {
                valid += 1;
                for d in (1..=n).filter(|&d| ((1u32 << d) - 1).div_ceil(d) > b as u32) {
                    ensure(reports[d as usize - 1].uncovered.is_empty(), || {
                        format!("{parts:?} valid for b = {b} but leaves rank-{d} flats uncovered")
                    })?;
                }
            }
        }
    }
    ensure(valid > 0, || "no valid partition exercised the implication".into())?;
    Ok(format!(
        "{} partitions, {valid} valid (partition, b) pairs, zero violations",
        cases.len()
    ))
}

/// A flat witness always means the verifier rejects.
fn ac7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut witnessed = 0;
    let trials = 2000;
    for i in 0..trials {
        let n = 2 + (i % 2) as u32;
        let m = binary_matroid(n).map_err(err)?;
        let k = (1usize << n).div_ceil(n as usize);
        let b = rng.gen_range(1..=2);
        let c = rng.gen_range(1..=2);
        let parts = random_partition(&mut rng, &binary_ground(n), 2 * k);
        let p = Partition::new(m, parts.clone()).map_err(err)?;
        if find_flat_witness(&p, b, n).map_err(err)?.is_some() {
            witnessed += 1;
            ensure(!verify_decomposition(&p, b, c).map_err(err)?.verdict.is_valid(), || {
                format!("{parts:?}: witness for b = {b} yet verified valid with c = {c}")
            })?;
        }
    }
    ensure(witnessed > 0, || "no witness found; the check is vacuous".into())?;
    Ok(format!(
        "{trials} partitions, {witnessed} witnesses, all rejected by the verifier"
    ))
}

/// Union coloring equals the density number on random binary restrictions
/// and on partition-matroid fixtures.
fn ac8() -> Check {
    let mut sets = 0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(800 + seed);
        let n = rng.gen_range(2..=6u32);
        let pool = binary_ground(n);
        let size = rng.gen_range(1..=12usize.min(pool.len()));
        let mut subset: Vec<u64> = pool.choose_multiple(&mut rng, size).copied().collect();
        subset.sort_unstable();
        let r = restrict(&binary_matroid(n).map_err(err)?, &subset).map_err(err)?;
        let union = optimal_coloring(&r).map_err(err)?.map_or(0, |c| c.k);
        let density = coloring_number_density(&r).map_err(err)?;
        let oracle = density_number(&subset);
        ensure(union == density && density == oracle, || {
            format!("seed {seed}: {subset:?} union {union}, density {density}, oracle {oracle}")
        })?;
        sets += 1;
    }
    let fixtures: Vec<Vec<Vec<u64>>> = vec![
        vec![vec![0]],
        vec![vec![0, 1, 2]],
        vec![vec![10], vec![20]],
        vec![vec![0, 1], vec![2, 3, 4], vec![5]],
        vec![vec![1, 2, 3, 4], vec![5, 6], vec![7, 8, 9], vec![10]],
        (0..6).map(|i| vec![2 * i, 2 * i + 1]).collect(),
        vec![(0..7).collect(), (7..12).collect()],
    ];
    for classes in &fixtures {
        let m = partition_matroid(classes.clone()).map_err(err)?;
        let union = optimal_coloring(&m).map_err(err)?.map_or(0, |c| c.k);
        let density = coloring_number_density(&m).map_err(err)?;
        let widest = classes.iter().map(Vec::len).max().unwrap_or(0);
        ensure(union == density && density == widest, || {
            format!("{classes:?}: union {union}, density {density}, widest class {widest}")
        })?;
    }
    Ok(format!(
        "{sets} binary restrictions and {} partition fixtures agree",
        fixtures.len()
    ))
}

/// The searcher agrees with naive enumeration at n = 2 and with the
/// archived n = 3 results.
fn ac9() -> Check {
    let plane = set_partitions(&binary_ground(2));
    ensure(plane.len() == 5, || format!("{} partitions of a 3-set", plane.len()))?;
    let m = binary_matroid(2).map_err(err)?;
    for b in 1..=2 {
        for c in 1..=2 {
            let first = plane.iter().find(|p| naive_valid(p, b, 2 * c)).cloned();
            let got = search_decomposition(&m, b, c, 1_000_000).map_err(err)?.outcome;
            let want = first.map_or(SearchOutcome::Nonexistent, |parts| SearchOutcome::Found { parts });
            ensure(got == want, || {
                format!("n = 2, (b, c) = ({b}, {c}): {got:?} vs naive {want:?}")
            })?;
        }
    }
    let fixture: serde_json::Value = serde_json::from_str(include_str!("fixtures/search_n3.json")).map_err(err)?;
    let fano = set_partitions(&binary_ground(3));
    ensure(fano.len() == 877, || format!("{} partitions of a 7-set", fano.len()))?;
    let m = binary_matroid(3).map_err(err)?;
    let mut summary = Vec::new();
    for case in fixture["cases"].as_array().ok_or("fixture")? {
        let b = case["b"].as_u64().ok_or("b")? as usize;
        let c = case["c"].as_u64().ok_or("c")? as usize;
        let count = fano.iter().filter(|p| naive_valid(p, b, 3 * c)).count();
        ensure(count as u64 == case["valid_count"].as_u64().ok_or("count")?, || {
            format!("n = 3, ({b}, {c}): {count} valid, archived {}", case["valid_count"])
        })?;
        let want: Option<Vec<Vec<u64>>> = serde_json::from_value(case["first_valid"].clone()).map_err(err)?;
        let want = want.map_or(SearchOutcome::Nonexistent, |parts| SearchOutcome::Found { parts });
        let got = search_decomposition(&m, b, c, 10_000_000).map_err(err)?.outcome;
        ensure(got == want, || {
            format!("n = 3, ({b}, {c}): {got:?} vs archived {want:?}")
        })?;
        summary.push(format!("({b},{c}):{count}"));
    }
    Ok(format!("n = 2 matches naive; n = 3 valid counts {}", summary.join(" ")))
}

/// Every subcommand prints the same bytes for 1 and 4 workers and on a
/// repeat run.
fn ac10() -> Check {
    let dir = tempfile::tempdir().map_err(err)?;
    let write = |name: &str, body: &str| -> Result<String, String> {
        let path = dir.path().join(name);
        std::fs::write(&path, body).map_err(err)?;
        Ok(path.to_str().ok_or("path")?.to_string())
    };
    let plane = write(
        "plane.json",
        r#"{"matroid":{"kind":"binary","n":2},"parts":[[1,2],[3]]}"#,
    )?;
    let fano = write(
        "fano.json",
        r#"{"matroid":{"kind":"binary","n":3},"parts":[[1],[2],[3],[4],[5],[6],[7]]}"#,
    )?;
    let quad = write(
        "quad.json",
        r#"{"matroid":{"kind":"binary","n":4},"parts":[[1,2,3,4],[5,6,7,8],[9,10,11,12],[13,14,15]]}"#,
    )?;
    let spec = write("spec.json", r#"{"kind":"binary","n":5}"#)?;
    let runs: Vec<Vec<&str>> = vec![
        vec!["color", "--input", &spec],
        vec!["color", "--n", "4", "--k", "3"],
        vec!["flats", "--n", "6", "--d", "3"],
        vec!["flats", "--n", "6", "--d", "4", "--sample", "10", "--seed", "42"],
        vec!["census", "--n", "1..=7", "--d", "1..=7"],
        vec!["verify", "--input", &quad, "--b", "2", "--c", "1"],
        vec!["verify", "--input", &fano, "--b", "1", "--c", "1"],
        vec!["witness", "--input", &fano, "--b", "1"],
        vec!["witness", "--input", &plane, "--b", "1"],
        vec!["covering", "--input", &quad, "--c", "1"],
        vec!["search", "--n", "3", "--b", "1", "--c", "1"],
        vec!["search", "--n", "4", "--b", "1", "--c", "2", "--format", "table"],
        vec!["bounds", "--b", "1..=4", "--c", "1..=3", "--format", "csv"],
    ];
    let exe = env!("CARGO_BIN_EXE_matdecomp");
    for args in &runs {
        let mut outputs = Vec::new();
        for workers in ["1", "4", "1", "4"] {
            let out = Command::new(exe)
                .args(args)
                .args(["--workers", workers])
                .output()
                .map_err(err)?;
            outputs.push((out.status.code(), out.stdout));
        }
        ensure(outputs.iter().all(|o| *o == outputs[0]), || {
            format!("{args:?} differs across runs")
        })?;
        ensure(!outputs[0].1.is_empty(), || format!("{args:?} printed nothing"))?;
    }
    // The sharded flat stream itself is order-stable.
    let shards = flat_shards(6, 3, 1 << 20).map_err(err)?;
    ensure(shards.len() == 20, || format!("{} shards", shards.len()))?;
    Ok(format!(
        "{} commands byte-identical over workers 1, 4 and repeats",
        runs.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 coloring numbers", ac1, Duration::from_secs(60)),
        ("AC2 flat coloring formula", ac2, Duration::from_secs(120)),
        ("AC3 exact flat counts", ac3, Duration::from_secs(60)),
        ("AC4 flat lower bound", ac4, Duration::from_secs(5)),
        ("AC5 threshold table", ac5, Duration::from_secs(60)),
        ("AC6 covering argument", ac6, Duration::from_secs(600)),
        ("AC7 witness soundness", ac7, Duration::from_secs(600)),
        ("AC8 oracle equivalence", ac8, Duration::from_secs(600)),
        ("AC9 searcher ground truth", ac9, Duration::from_secs(600)),
        ("AC10 determinism", ac10, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > limit => Err(format!("{msg}, but took {took:.2?} (limit {limit:?})")),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS {name}: {msg} [{took:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg} [{took:.2?}]");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
