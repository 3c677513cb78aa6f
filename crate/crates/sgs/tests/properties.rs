//! Randomized invariants: switching, relabeling, and negation must interact
//! with the polynomial and symmetry machinery exactly as the theory says.

use proptest::prelude::*;
use sgs::cycles::{cycle_sign_vector, spanning_tree};
use sgs::graph::{SignedGraph, SwitchSet, VertexPermutation};
use sgs::poly::{char_poly, is_spectrally_symmetric, matching_poly};
use sgs::spectral::{eigenvalues, numeric_symmetry_check};

/// Random connected signed graph on 2..=7 vertices: a random spanning tree
/// plus random extra edges, random signs.
fn connected_graph() -> impl Strategy<Value = SignedGraph> {
    (2usize..=7)
        .prop_flat_map(|n| {
            let tree_choices: Vec<_> = (1..n).collect();
            (
                Just(n),
                proptest::collection::vec(0usize..usize::MAX, tree_choices.len()),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extras, signs)| {
            let mut edges: Vec<(usize, usize, i8)> = vec![];
            let mut present = vec![false; n * n];
            for v in 1..n {
                let p = parents[v - 1] % v;
                edges.push((p, v, 1));
                present[p * n + v] = true;
            }
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if extras[idx] && !present[u * n + v] {
                        edges.push((u, v, 1));
                        present[u * n + v] = true;
                    }
                    idx += 1;
                }
            }
            let signed: Vec<(usize, usize, i8)> = edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v, _))| (u, v, if signs[i % signs.len()] { 1 } else { -1 }))
                .collect();
            SignedGraph::new(n, &signed).unwrap()
        })
}

fn subset(n: usize, bits: u32) -> SwitchSet {
    SwitchSet::new((0..n).filter(|i| bits >> i & 1 == 1))
}

proptest! {
    #[test]
    fn parse_serialize_round_trip(g in connected_graph()) {
        let text = g.serialize();
        let back = SignedGraph::parse(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn switching_preserves_char_poly(g in connected_graph(), bits in any::<u32>()) {
        let s = g.switch(&subset(g.n(), bits)).unwrap();
        prop_assert_eq!(char_poly(&s), char_poly(&g));
    }

    #[test]
    fn switching_preserves_fingerprint(g in connected_graph(), bits in any::<u32>()) {
        let t = spanning_tree(&g).unwrap();
        let s = g.switch(&subset(g.n(), bits)).unwrap();
        prop_assert_eq!(cycle_sign_vector(&s, &t), cycle_sign_vector(&g, &t));
    }

    #[test]
    fn relabeling_preserves_symmetry_and_matching(g in connected_graph(), seed in any::<u64>()) {
        // a random permutation from the seed
        let n = g.n();
        let mut image: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            image.swap(i, j);
        }
        let p = VertexPermutation::new(image).unwrap();
        let h = g.apply_permutation(&p).unwrap();
        prop_assert_eq!(char_poly(&h), char_poly(&g));
        prop_assert_eq!(matching_poly(&h), matching_poly(&g));
        prop_assert_eq!(is_spectrally_symmetric(&h), is_spectrally_symmetric(&g));
    }

    #[test]
    fn negation_mirrors_char_poly(g in connected_graph()) {
        // φ(−Γ, x) = (−1)^n φ(Γ, −x)
        let lhs = char_poly(&g.negate());
        let mut rhs = char_poly(&g).substitute_neg_x();
        if g.n() % 2 == 1 {
            rhs = rhs.scale(&num_bigint::BigInt::from(-1));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn numeric_and_exact_symmetry_agree(g in connected_graph()) {
        let spectrum = eigenvalues(&g);
        prop_assert_eq!(numeric_symmetry_check(&spectrum), is_spectrally_symmetric(&g));
    }

    #[test]
    fn eigenvalue_identities(g in connected_graph()) {
        let s = eigenvalues(&g);
        let trace: f64 = s.values.iter().sum();
        let energy: f64 = s.values.iter().map(|x| x * x).sum();
        prop_assert!(trace.abs() < 1e-9 * g.n() as f64);
        prop_assert!((energy - 2.0 * g.m() as f64).abs() < 1e-9 * g.n() as f64);
    }

    #[test]
    fn switching_is_involution(g in connected_graph(), bits in any::<u32>()) {
        let u = subset(g.n(), bits);
        prop_assert_eq!(g.switch(&u).unwrap().switch(&u).unwrap(), g);
    }
}
