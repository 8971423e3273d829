//! Rank-d flats of binary(n): canonical enumeration, the exact product
//! formula, and the lower bound 2^(dn-d²-d).

use matroid_decomp::flats::{flat_count, pair_flat_count};
use matroid_decomp::{count_flats_exact, enumerate_flats, flats_through_pair, Result};

fn main() -> Result<()> {
    println!("lines of the Fano plane:");
    for f in enumerate_flats(3, 2)? {
        println!("  {:?}", f.elements()?);
    }

    println!(
        "\n{:>2} {:>2} {:>10} {:>10} {:>12}",
        "n", "d", "exact", "bound", "enumerated"
    );
    for n in 1..=6 {
        for d in 1..=n {
            let c = flat_count(n, d);
            let enumerated = enumerate_flats(n, d)?.count();
            let bound = c.lower_bound.map_or("-".to_string(), |b| b.to_string());
            println!("{n:>2} {d:>2} {:>10} {bound:>10} {enumerated:>12}", c.exact);
        }
    }

    // The count grows like 2^(d(n-d)); exact values stay exact.
    println!("\nrank-10 flats of binary(40): {}", count_flats_exact(40, 10));

    let through: Vec<_> = flats_through_pair(4, 3, 1, 2)?.collect();
    println!(
        "\nplanes of binary(4) through {{1, 2}}: {} (formula {})",
        through.len(),
        pair_flat_count(4, 3)
    );
    Ok(())
}
