//! Property tests tying the search implementations to brute-force
//! references on random graphs.

use gnd_core::connectivity::{is_gn_cut, kappa, kappa_naive};
use gnd_core::gc::{gc_number, gc_number_naive, validate_certificate};
use gnd_core::pmc::{distinguishable_criterion, distinguishable_oracle, Syndrome, TestAssignment};
use gnd_core::{cartesian_product, Graph, VertexSet};
use proptest::prelude::*;

/// Random graph on `n` vertices from an edge-presence vector; optionally
/// forced connected by retry filtering.
fn graph_strategy(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    n_range.prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        prop::collection::vec(prop::bool::weighted(0.45), len).prop_map(move |mask| {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &m)| m)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected_graph_strategy(
    n_range: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Graph> {
    graph_strategy(n_range).prop_filter("connected", |g| g.is_connected())
}

fn subset_strategy(n: usize) -> impl Strategy<Value = VertexSet> {
    prop::collection::vec(prop::bool::ANY, n).prop_map(move |bits| {
        VertexSet::from_ids(
            n,
            bits.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as u32),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn components_partition_the_survivors(
        (g, x) in graph_strategy(1..=10).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), subset_strategy(n))
        })
    ) {
        let comps = g.components_after_removal(&x);
        let total: usize = comps.iter().map(|c| c.count()).sum();
        prop_assert_eq!(total, g.n() - x.count());
        let mut union = VertexSet::new(g.n());
        for c in &comps {
            prop_assert!(union.is_disjoint(c));
            union.union_with(c);
            prop_assert!(!c.is_empty());
        }
        prop_assert_eq!(union, x.complement());
        // ordering: size ascending, then smallest contained id
        for w in comps.windows(2) {
            let key = |c: &VertexSet| (c.count(), c.min_id());
            prop_assert!(key(&w[0]) <= key(&w[1]));
        }
        prop_assert_eq!(
            g.components_after_removal(&g.empty_set()).len() == 1,
            g.is_connected() && g.n() > 0
        );
    }

    #[test]
    fn induced_min_degree_of_everything_is_delta(g in graph_strategy(1..=10)) {
        prop_assert_eq!(g.induced_min_degree(&g.full_set()), Some(g.min_degree()));
    }

    #[test]
    fn edge_between_is_symmetric(
        (g, a, b) in graph_strategy(1..=10).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), subset_strategy(n), subset_strategy(n))
        })
    ) {
        prop_assert_eq!(g.has_edge_between(&a, &b), g.has_edge_between(&b, &a));
    }

    #[test]
    fn product_count_identities(
        g in graph_strategy(1..=6),
        h in graph_strategy(1..=6),
    ) {
        let p = cartesian_product(&g, &h, 4096).unwrap();
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(
            p.edge_count(),
            g.n() * h.edge_count() + h.n() * g.edge_count()
        );
        for (id, &(u, v)) in p.labels().unwrap().iter().enumerate() {
            prop_assert_eq!(p.degree(id), g.degree(u as usize) + h.degree(v as usize));
        }
    }

    #[test]
    fn criterion_agrees_with_syndrome_oracle(
        g in connected_graph_strategy(2..=5),
        a in 0u32..32,
        b in 0u32..32,
    ) {
        let n = g.n();
        let f1 = VertexSet::from_ids(n, (0..n as u32).filter(|i| a >> i & 1 == 1));
        let f2 = VertexSet::from_ids(n, (0..n as u32).filter(|i| b >> i & 1 == 1));
        prop_assume!(f1 != f2);
        prop_assert_eq!(
            distinguishable_criterion(&g, &f1, &f2).unwrap(),
            distinguishable_oracle(&g, &f1, &f2).unwrap()
        );
    }

    #[test]
    fn full_fault_set_is_consistent_with_any_syndrome(
        g in graph_strategy(2..=6),
        raw in prop::num::u64::ANY,
    ) {
        let ta = TestAssignment::of(&g);
        prop_assume!(ta.len() <= 64);
        let sigma = Syndrome::from_mask(raw, ta.len());
        prop_assert!(ta.is_consistent(&sigma, &g.full_set()));
    }

    #[test]
    fn kappa_agrees_with_naive(g in connected_graph_strategy(2..=8), good in 0usize..=2) {
        let fast = kappa(&g, good, g.n()).unwrap();
        prop_assert_eq!(fast.value(), kappa_naive(&g, good));
        if let gnd_core::GnCutResult::Exists { value, witness } = fast {
            prop_assert!(is_gn_cut(&g, &witness, good));
            prop_assert_eq!(witness.count(), value);
        }
    }

    #[test]
    fn gc_agrees_with_naive(g in connected_graph_strategy(2..=8), good in 0usize..=2) {
        let fast = gc_number(&g, good, g.n()).unwrap();
        prop_assert_eq!(fast.value.exact(), gc_number_naive(&g, good));
        if let Some(cert) = &fast.certificate {
            prop_assert!(validate_certificate(&g, good, cert).is_ok());
        }
        // lower bound versus kappa
        if let (Some(c), Some(k)) = (fast.value.exact(), kappa(&g, good, g.n()).unwrap().value()) {
            prop_assert!(c >= k + good + 1);
        }
    }
}
