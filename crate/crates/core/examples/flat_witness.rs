//! Refuting a partition with a flat: a rank-d flat whose elements land in
//! distinct parts sits inside some transversal, and when (2^d-1)/d > b
//! that transversal cannot be b-colored.

use matroid_decomp::decomp::{flat_witness_scan, uncolorable_ranks};
use matroid_decomp::{binary_matroid, find_flat_witness, verify_decomposition, Partition, Result};

fn main() -> Result<()> {
    println!("ranks forcing more than 1 color up to 4: {:?}", uncolorable_ranks(1, 4));
    println!(
        "ranks forcing more than 2 colors up to 5: {:?}",
        uncolorable_ranks(2, 5)
    );

    let m = binary_matroid(3)?;
    let singletons = Partition::new(m.clone(), (1..=7).map(|e| vec![e]).collect())?;
    let scan = flat_witness_scan(&singletons, 1, 3, 1_000)?;
    let flat = scan.witness.expect("every line is uncovered");
    println!("witness: {:?} after {} flats", flat.elements()?, scan.flats_scanned);
    println!(
        "verifier agrees: {:?}",
        verify_decomposition(&singletons, 1, 1)?.verdict
    );

    // Pairing points so that every line has two points in one part leaves
    // no rank-2 witness.
    let paired = Partition::new(binary_matroid(2)?, vec![vec![1, 2], vec![3]])?;
    println!("binary(2) {{1,2}},{{3}}: {:?}", find_flat_witness(&paired, 1, 2)?);
    Ok(())
}
