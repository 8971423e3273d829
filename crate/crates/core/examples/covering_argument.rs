//! The counting argument at desk scale: how many rank-d flats a partition
//! covers, against how many it could cover at most.

use matroid_decomp::decomp::{pair_capacity, relaxed_capacity};
use matroid_decomp::{binary_matroid, covering_capacity, covering_report, Partition, Result};

fn main() -> Result<()> {
    let m = binary_matroid(4)?;
    // Four parts of at most k = 4 elements.
    let parts = vec![
        vec![1, 2, 3, 4],
        vec![5, 6, 7, 8],
        vec![9, 10, 11, 12],
        vec![13, 14, 15],
    ];
    let p = Partition::new(m, parts)?;

    for d in 2..=3 {
        let report = covering_report(4, d, &p)?;
        let cap = covering_capacity(4, d, &p, 1)?;
        println!(
            "d = {d}: {} covered, {} uncovered of {}; pair capacity {}, aggregate {}, with l = n {}, relaxed {}",
            report.covered,
            report.uncovered.len(),
            report.total(),
            pair_capacity(4, d, &p),
            cap.capacity,
            cap.capacity_ell_n,
            cap.relaxed
        );
    }

    // The relaxed closed form dwarfs the number of flats long before the
    // dimension where the counting bites.
    let r = relaxed_capacity(10, 2, 1);
    println!("relaxed capacity at n = 10, d = 2: {}/{}", r.numer(), r.denom());
    Ok(())
}
