use std::collections::BTreeSet;

use proptest::prelude::*;

use altermatic::coloring::{chromatic_number, greedy_coloring, has_homomorphism, is_homomorphism};
use altermatic::constructions::{blow_up, categorical_product, kneser_graph, mycielskian};
use altermatic::gale::{gale_points, hemisphere_split, Split, DEGENERACY_EPS};
use altermatic::signed::property::{BothContain, EitherContains};
use altermatic::signed::{alt_min, alt_property, alt_sigma, certify, salt_sigma, signed_split, Strategy as Search};
use altermatic::{alt, Graph, Hypergraph, Kind, LinearOrder, Mode, SignVector};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn sign_vector(max_len: usize) -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(-1i8..=1, 0..=max_len)
}

/// Longest alternating subsequence of the nonzero entries, by dynamic
/// programming over subsequences.
fn alternation_oracle(x: &[i8]) -> usize {
    let mut best_ending = vec![0usize; x.len()];
    for i in 0..x.len() {
        if x[i] == 0 {
            continue;
        }
        best_ending[i] = 1;
        for j in 0..i {
            if x[j] == -x[i] {
                best_ending[i] = best_ending[i].max(best_ending[j] + 1);
            }
        }
    }
    best_ending.into_iter().max().unwrap_or(0)
}

/// A hypergraph on `[n]` from edge bitmasks.
fn hypergraph(max_n: u32, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::btree_set(1u32..(1 << n), 0..=max_edges).prop_map(move |masks| {
            let edges = masks.into_iter().map(|m| (0..n).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect()).collect();
            Hypergraph::on_range(n, edges).unwrap()
        })
    })
}

fn with_order(max_n: u32, max_edges: usize) -> impl Strategy<Value = (Hypergraph, LinearOrder)> {
    hypergraph(max_n, max_edges).prop_flat_map(|h| {
        let vertices = h.vertices().to_vec();
        (Just(h), Just(vertices).prop_shuffle().prop_map(|v| LinearOrder::new(v).unwrap()))
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Enumerates all of `{-1,0,1}^n` directly against the hyperedge sets.
fn brute_force(h: &Hypergraph, sigma: &LinearOrder, kind: Kind) -> usize {
    let n = sigma.len();
    let edges: Vec<BTreeSet<u32>> = h.edges().iter().map(|e| e.iter().copied().collect()).collect();
    let contains = |side: &BTreeSet<u32>| edges.iter().any(|e| e.is_subset(side));
    let mut best = 0;
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let x: Vec<i8> = (0..n)
            .map(|_| {
                let d = (c % 3) as i8 - 1;
                c /= 3;
                d
            })
            .collect();
        let plus: BTreeSet<u32> = (0..n).filter(|&i| x[i] == 1).map(|i| sigma.as_slice()[i]).collect();
        let minus: BTreeSet<u32> = (0..n).filter(|&i| x[i] == -1).map(|i| sigma.as_slice()[i]).collect();
        let ok = match kind {
            Kind::Alt => !contains(&plus) && !contains(&minus),
            Kind::Salt => !(contains(&plus) && contains(&minus)),
        };
        if ok {
            best = best.max(alternation_oracle(&x));
        }
    }
    best
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn alternation_matches_subsequence_oracle(x in sign_vector(24)) {
        prop_assert_eq!(alt(&SignVector::new(x.clone()).unwrap()), alternation_oracle(&x));
    }

    #[test]
    fn alternation_is_negation_invariant(x in sign_vector(24)) {
        let v = SignVector::new(x).unwrap();
        prop_assert_eq!(v.alt(), v.negated().alt());
    }

    #[test]
    fn zeroing_never_increases_alternation(x in sign_vector(24), i in any::<prop::sample::Index>()) {
        prop_assume!(!x.is_empty());
        let mut y = x.clone();
        y[i.index(x.len())] = 0;
        prop_assert!(alt(&SignVector::new(y).unwrap()) <= alt(&SignVector::new(x).unwrap()));
    }

    #[test]
    fn signed_split_sides_are_disjoint_and_cover_support(x in sign_vector(12)) {
        let n = x.len() as u32;
        let sigma = LinearOrder::natural(n);
        let pair = signed_split(&SignVector::new(x.clone()).unwrap(), &sigma).unwrap();
        prop_assert!(pair.plus.is_disjoint(&pair.minus));
        prop_assert_eq!(pair.plus.len() + pair.minus.len(), x.iter().filter(|&&s| s != 0).count());
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn kernel_matches_brute_force((h, sigma) in with_order(7, 10)) {
        let (a, _) = alt_sigma(&h, &sigma, Mode::BranchAndBound).unwrap();
        let (s, _) = salt_sigma(&h, &sigma, Mode::BranchAndBound).unwrap();
        prop_assert_eq!(a, brute_force(&h, &sigma, Kind::Alt));
        prop_assert_eq!(s, brute_force(&h, &sigma, Kind::Salt));
    }

    #[test]
    fn modes_agree((h, sigma) in with_order(12, 14)) {
        for kind in [Kind::Alt, Kind::Salt] {
            let ex = certify(&h, &sigma, kind, Mode::Exhaustive).unwrap();
            let bb = certify(&h, &sigma, kind, Mode::BranchAndBound).unwrap();
            prop_assert_eq!(ex.value, bb.value);
            prop_assert_eq!(&ex.witness, &bb.witness);
            ex.check(&h).unwrap();
            bb.check(&h).unwrap();
        }
    }

    #[test]
    fn alt_at_most_salt_at_most_n((h, sigma) in with_order(12, 14)) {
        let (a, _) = alt_sigma(&h, &sigma, Mode::BranchAndBound).unwrap();
        let (s, _) = salt_sigma(&h, &sigma, Mode::BranchAndBound).unwrap();
        prop_assert!(a <= s && s <= h.vertex_count());
    }

    #[test]
    fn property_form_agrees((h, sigma) in with_order(10, 10)) {
        let (a, _) = alt_sigma(&h, &sigma, Mode::BranchAndBound).unwrap();
        let (s, _) = salt_sigma(&h, &sigma, Mode::BranchAndBound).unwrap();
        prop_assert_eq!(alt_property(&EitherContains::new(&h).unwrap(), &sigma).unwrap(), a);
        prop_assert_eq!(alt_property(&BothContain::new(&h).unwrap(), &sigma).unwrap(), s);
    }

    #[test]
    fn certificates_bound_the_chromatic_number((h, sigma) in with_order(8, 9)) {
        // The bounds need at least one hyperedge: with none, KG(h) is empty.
        prop_assume!(h.edge_count() > 0);
        let chi = chromatic_number(&kneser_graph(&h).graph);
        for kind in [Kind::Alt, Kind::Salt] {
            let cert = certify(&h, &sigma, kind, Mode::BranchAndBound).unwrap();
            prop_assert!(cert.bound <= chi, "{:?} bound {} above chi {}", kind, cert.bound, chi);
        }
    }

    #[test]
    fn minimum_over_orders_is_below_any_order((h, sigma) in with_order(6, 8)) {
        for kind in [Kind::Alt, Kind::Salt] {
            let exact = alt_min(&h, kind, Search::ExactAllOrders { cap: 6 }).unwrap();
            let local = alt_min(&h, kind, Search::LocalSearch { seed: 1, restarts: 2 }).unwrap();
            let fixed = certify(&h, &sigma, kind, Mode::BranchAndBound).unwrap();
            prop_assert!(exact.value <= fixed.value);
            prop_assert!(exact.value <= local.value);
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn blow_up_is_homomorphically_equivalent(g in graph(6), seed in prop::collection::vec(1usize..=3, 6)) {
        let r = &seed[..g.n()];
        let mu: Vec<usize> = (0..g.n()).rev().collect();
        let b = blow_up(&g, r, &mu).unwrap();
        prop_assert!(is_homomorphism(&b.graph, &g, &b.origin));
        prop_assert!(has_homomorphism(&g, &b.graph).unwrap().is_some());
        prop_assert_eq!(chromatic_number(&b.graph), chromatic_number(&g));
    }

    #[test]
    fn product_chromatic_number_is_below_both_factors(g in graph(6), h in graph(5)) {
        let p = categorical_product(&g, &h);
        let (cg, ch) = (chromatic_number(&g), chromatic_number(&h));
        prop_assert!(chromatic_number(&p) <= cg.min(ch));
        let coloring = greedy_coloring(&g);
        let projected = coloring.project_onto_product(h.n());
        projected.check(&p).unwrap();
    }

    #[test]
    fn mycielskian_raises_chromatic_number_by_one(g in graph(6)) {
        prop_assert_eq!(chromatic_number(&mycielskian(&g)), chromatic_number(&g) + 1);
    }

    #[test]
    fn hemisphere_splits_are_antipodal(n in 3usize..9, m in 1usize..3, dir in prop::collection::vec(-1.0f64..1.0, 3)) {
        prop_assume!(m < n);
        let x: Vec<f64> = dir[..m + 1].to_vec();
        let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        let x: Vec<f64> = x.iter().map(|a| a / norm).collect();
        let minus_x: Vec<f64> = x.iter().map(|a| -a).collect();
        let z = gale_points(n, m, &LinearOrder::natural(n as u32)).unwrap();
        match (hemisphere_split(&z, &x, DEGENERACY_EPS).unwrap(), hemisphere_split(&z, &minus_x, DEGENERACY_EPS).unwrap()) {
            (Split::Pair(p), Split::Pair(q)) => prop_assert_eq!(p.swapped(), q),
            (Split::Degenerate, Split::Degenerate) => {}
            other => prop_assert!(false, "one side degenerate: {:?}", other),
        }
    }
}
