//! Exhaustive search for (b,c)-decompositions of small matroids.
//!
//! Finding one is verified before it is returned; running out of budget is
//! reported as such and says nothing about existence.

use matroid_decomp::decomp::SearchOutcome;
use matroid_decomp::{binary_matroid, search_decomposition, Result};

fn main() -> Result<()> {
    for n in 2..=3 {
        let m = binary_matroid(n)?;
        for (b, c) in [(1, 1), (1, 2), (2, 1)] {
            let r = search_decomposition(&m, b, c, 1_000_000)?;
            let outcome = match &r.outcome {
                SearchOutcome::Found { parts } => format!("found {parts:?}"),
                SearchOutcome::Nonexistent => "none exists".to_string(),
                SearchOutcome::Exhausted => "budget exhausted".to_string(),
            };
            println!("binary({n}), b = {b}, c = {c}: {outcome} ({} nodes)", r.nodes);
        }
    }
    let r = search_decomposition(&binary_matroid(4)?, 1, 1, 20_000)?;
    println!("binary(4), b = 1, c = 1 with 20000 nodes: {:?}", r.outcome);
    Ok(())
}
