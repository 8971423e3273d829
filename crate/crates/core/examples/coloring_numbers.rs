//! Coloring numbers two ways: the density formula max ⌈|R|/r(R)⌉ and a
//! constructive matroid-union partitioner that produces the colors.

use matroid_decomp::coloring::optimal_coloring;
use matroid_decomp::decomp::binary_coloring_number;
use matroid_decomp::{binary_matroid, coloring_number_density, coloring_number_density_flats, is_b_colorable, Result};

fn main() -> Result<()> {
    println!("{:>2} {:>8} {:>8} {:>10}", "n", "union", "density", "⌈2^n/n⌉");
    for n in 2..=5 {
        let m = binary_matroid(n)?;
        let coloring = optimal_coloring(&m)?.expect("nonempty ground set");
        coloring.validate(&m)?;
        let density = if n <= 4 {
            coloring_number_density(&m)?
        } else {
            coloring_number_density_flats(&m)?
        };
        println!(
            "{n:>2} {:>8} {density:>8} {:>10}",
            coloring.k,
            binary_coloring_number(n)
        );
    }

    let m = binary_matroid(3)?;
    let coloring = optimal_coloring(&m)?.expect("nonempty");
    println!("\nan optimal coloring of binary(3):");
    for (i, class) in coloring.classes.iter().enumerate() {
        println!("  color {i}: {class:?}");
    }

    // A line of the Fano plane has 3 points and rank 2: two colors suffice,
    // one does not.
    for b in 1..=2 {
        println!(
            "line {{1,2,3}} is {b}-colorable: {}",
            is_b_colorable(&m, &[1, 2, 3], b)?
        );
    }
    Ok(())
}
