//! Rank, reduced echelon form and spans over GF(2).
//!
//! Run with `cargo run --example gf2_basics`.

use matroid_decomp::{gf2_rank, gf2_rref, gf2_span_nonzero, Gf2Vec, Result};

fn main() -> Result<()> {
    let v = |bits| Gf2Vec::new(4, bits);
    let vectors = [v(0b0011)?, v(0b0110)?, v(0b0101)?, v(0b1000)?];

    // 0011 + 0110 = 0101, so the third vector adds nothing.
    println!("rank = {}", gf2_rank(&vectors)?);

    let rref = gf2_rref(&vectors)?;
    println!("reduced basis:");
    for row in rref.vectors() {
        println!("  {:04b}  (hex {})", row.bits(), row.to_hex());
    }
    println!("pivots: {:?}", rref.pivots().collect::<Vec<_>>());

    let span = gf2_span_nonzero(&rref)?;
    println!("{} nonzero vectors in the span:", span.len());
    for w in &span {
        println!("  {:04b}", w.bits());
    }

    // Same span from a different generating set gives the same echelon form.
    let other = gf2_rref(&[v(0b0101)?, v(0b1011)?, v(0b0011)?])?;
    println!("same subspace as before: {}", other == rref);
    Ok(())
}
