//! The binary matroid on all nonzero vectors of GF(2)^n, alongside the
//! partition, uniform and restricted matroids used as fixtures.

use matroid_decomp::{binary_matroid, partition_matroid, restrict, uniform_matroid, MatroidSpec, Result};

fn main() -> Result<()> {
    // Element ids are the vectors themselves: 5 is 101.
    let fano = binary_matroid(3)?;
    println!(
        "binary(3): {} elements, rank {}",
        fano.ground_len(),
        fano.ground_rank()?
    );
    println!("rank {{1, 2, 3}} = {}", fano.rank(&[1, 2, 3])?);
    println!("{{1, 2, 4}} independent: {}", fano.is_independent(&[1, 2, 4])?);
    println!("closure {{1, 6}} = {:?}", fano.closure(&[1, 6])?);
    println!("{{1, 6, 7}} is a flat: {}", fano.is_flat(&[1, 6, 7])?);

    let classes = partition_matroid(vec![vec![0, 1], vec![2, 3, 4]])?;
    println!("partition matroid rank = {}", classes.ground_rank()?);

    let u = uniform_matroid(5, 2)?;
    println!("U(5,2) rank of {{0,1,2}} = {}", u.rank(&[0, 1, 2])?);

    // Restrictions keep the parent's rank function on a subset.
    let line = restrict(&fano, &[1, 2, 3])?;
    println!("restriction to a line: rank {}", line.ground_rank()?);

    // Matroids round-trip through the JSON spec format.
    let json = serde_json::to_string(line.spec()).expect("spec serializes");
    println!("spec: {json}");
    let back: MatroidSpec = serde_json::from_str(&json).expect("spec parses");
    println!("rebuilt ground: {:?}", back.build()?.ground_elements()?);
    Ok(())
}
