mod common;

use common::{density_number, rank_bits, span};
use matroid_decomp::coloring::optimal_coloring;
use matroid_decomp::gf2::{gf2_rref_in, Gf2Rref};
use matroid_decomp::{
    binary_matroid, gf2_rank, gf2_rref, is_b_colorable, is_b_colorable_constructive, restrict, Flat, Gf2Vec,
};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

fn vectors(width: u32, max_len: usize) -> impl Strategy<Value = Vec<Gf2Vec>> {
    vec(0..1u64 << width, 1..=max_len)
        .prop_map(move |bits| bits.into_iter().map(|b| Gf2Vec::new(width, b).unwrap()).collect())
}

fn subset_of_binary(n: u32, max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    btree_set(1..1u64 << n, 0..=max_len).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rank_matches_elimination(vs in vectors(12, 16)) {
        let bits: Vec<u64> = vs.iter().map(|v| v.bits()).collect();
        prop_assert_eq!(gf2_rank(&vs).unwrap(), rank_bits(&bits));
    }

    #[test]
    fn rref_is_canonical(vs in vectors(10, 12), extra in 0..1u64 << 10) {
        let r = gf2_rref(&vs).unwrap();
        r.check_invariants().unwrap();
        // Idempotent, and blind to the generating set.
        let again = gf2_rref_in(10, &r.vectors().collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(&again, &r);
        let mut mixed = vs.clone();
        mixed.reverse();
        mixed.push(vs.iter().fold(Gf2Vec::zero(10).unwrap(), |a, &b| a ^ b));
        prop_assert_eq!(&gf2_rref_in(10, &mixed).unwrap(), &r);
        let bits: Vec<u64> = vs.iter().map(|v| v.bits()).collect();
        prop_assert_eq!(r.rank(), rank_bits(&bits));
        prop_assert!(vs.iter().all(|&v| r.contains(v)));
        prop_assert_eq!(r.contains_bits(extra), rank_bits(&[bits.clone(), vec![extra]].concat()) == r.rank());
    }

    #[test]
    fn rank_axioms(x in subset_of_binary(5, 12), y in subset_of_binary(5, 12)) {
        let m = binary_matroid(5).unwrap();
        let r = |s: &[u64]| m.rank(s).unwrap();
        let union: Vec<u64> = x.iter().chain(&y).copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let inter: Vec<u64> = x.iter().filter(|e| y.contains(e)).copied().collect();
        prop_assert!(r(&x) <= x.len());
        prop_assert!(r(&x) <= r(&union) && r(&inter) <= r(&x));
        prop_assert!(r(&union) + r(&inter) <= r(&x) + r(&y));
        prop_assert_eq!(r(&x), rank_bits(&x));
    }

    #[test]
    fn closure_properties(x in subset_of_binary(5, 8), y in subset_of_binary(5, 4)) {
        let m = binary_matroid(5).unwrap();
        let cl = m.closure(&x).unwrap();
        prop_assert!(x.iter().all(|e| cl.contains(e)));
        prop_assert_eq!(m.closure(&cl).unwrap(), cl.clone());
        prop_assert_eq!(m.rank(&cl).unwrap(), m.rank(&x).unwrap());
        prop_assert!(m.is_flat(&cl).unwrap());
        prop_assert_eq!(&cl, &span(&x));
        let bigger: Vec<u64> = x.iter().chain(&y).copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let cl2 = m.closure(&bigger).unwrap();
        prop_assert!(cl.iter().all(|e| cl2.contains(e)));
        if !x.is_empty() {
            let f = Flat::spanned_by(5, &x).unwrap();
            prop_assert_eq!(f.elements().unwrap(), cl);
        }
    }

    #[test]
    fn restricted_coloring_matches_density(x in subset_of_binary(4, 10)) {
        prop_assume!(!x.is_empty());
        let m = restrict(&binary_matroid(4).unwrap(), &x).unwrap();
        let c = optimal_coloring(&m).unwrap().unwrap();
        c.validate(&m).unwrap();
        prop_assert_eq!(c.k, density_number(&x));
    }

    #[test]
    fn colorability_routes_agree(x in subset_of_binary(4, 10), b in 1usize..4) {
        let m = binary_matroid(4).unwrap();
        let dense = is_b_colorable(&m, &x, b).unwrap();
        prop_assert_eq!(dense, is_b_colorable_constructive(&m, &x, b).unwrap());
        prop_assert_eq!(dense, x.is_empty() || density_number(&x) <= b);
    }

    #[test]
    fn rref_rows_round_trip(vs in vectors(8, 8)) {
        let r = gf2_rref(&vs).unwrap();
        let rebuilt = Gf2Rref::from_rows(8, r.rows().to_vec()).unwrap();
        prop_assert_eq!(rebuilt, r);
    }
}
