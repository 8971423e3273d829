//! Checking a (b,c)-decomposition: every part has at most c·k elements
//! and every transversal is b-colorable. Failures carry a certificate
//! that replays independently.

use matroid_decomp::decomp::replay_certificate;
use matroid_decomp::{binary_matroid, verify_decomposition, Partition, Result};

fn main() -> Result<()> {
    let m = binary_matroid(2)?;

    let good = Partition::new(m.clone(), vec![vec![1, 2], vec![3]])?;
    let report = verify_decomposition(&good, 1, 1)?;
    println!("{{01,10}},{{11}}: {}", serde_json::to_string(&report).expect("json"));

    let singletons = Partition::new(m.clone(), vec![vec![1], vec![2], vec![3]])?;
    let report = verify_decomposition(&singletons, 1, 1)?;
    println!("singletons:     {}", serde_json::to_string(&report).expect("json"));
    println!("certificate replays: {}", replay_certificate(&singletons, &report)?);

    // With two colors per transversal the same partition passes.
    let report = verify_decomposition(&singletons, 2, 1)?;
    println!("singletons, b = 2: valid = {}", report.verdict.is_valid());

    let whole = Partition::new(binary_matroid(3)?, vec![(1..=7).collect()])?;
    let report = verify_decomposition(&whole, 1, 2)?;
    println!("binary(3) as one part, c = 2: {:?}", report.verdict);
    Ok(())
}
