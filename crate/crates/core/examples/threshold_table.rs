//! Dimensions past which binary(n) has no (b,c)-decomposition.

use matroid_decomp::theorem_threshold;

fn main() {
    println!("{:>3} {:>3} {:>3}  n_max", "b", "c", "d");
    for b in 1..=4 {
        for c in 1..=3 {
            let t = theorem_threshold(b, c).expect("b, c >= 1");
            println!("{b:>3} {c:>3} {:>3}  {}", t.d, t.n_max);
        }
    }
}
