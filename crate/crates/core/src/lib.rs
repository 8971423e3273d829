//! Matroid coloring and (b,c)-decomposition analysis, centred on the binary
//! matroid of all nonzero vectors in GF(2)^n.
//!
//! | module       | contents                                                        |
//! |--------------|-----------------------------------------------------------------|
//! | [`gf2`]      | bit-packed rank, reduced echelon form, spans                    |
//! | [`matroid`]  | rank-oracle matroids: binary, partition, uniform, restriction   |
//! | [`coloring`] | density characterization and matroid-union coloring             |
//! | [`flats`]    | canonical enumeration and exact counts of rank-d flats          |
//! | [`decomp`]   | decomposition verifier, flat witnesses, covering, search        |
//! | [`cli`]      | the `matdecomp` command line                                    |
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example` lists them.

pub mod cli;
pub mod coloring;
pub mod decomp;
pub mod error;
pub mod flats;
pub mod gf2;
pub mod matroid;

pub use coloring::{
    color, coloring_number, coloring_number_density, coloring_number_density_flats, is_b_colorable,
    is_b_colorable_constructive, Coloring,
};
pub use decomp::{
    covering_capacity, covering_report, find_flat_witness, search_decomposition, theorem_threshold,
    verify_decomposition, DecompReport, Partition, Verdict,
};
pub use error::{Error, Result};
pub use flats::{count_flats_exact, enumerate_flats, flat_count_lower_bound, flats_through_pair, Flat};
pub use gf2::{gf2_rank, gf2_rref, gf2_span_nonzero, Gf2Rref, Gf2Vec};
pub use matroid::{binary_matroid, partition_matroid, restrict, uniform_matroid, Matroid, MatroidSpec};
