//! Hard-coded cut constructions for certificate-only checks on graphs too
//! large for exhaustive search. Each builder addresses product vertices by
//! their coordinate labels.

use gnd_core::{Graph, VertexSet};
use std::collections::HashMap;

fn label_map(g: &Graph) -> HashMap<(u32, u32), usize> {
    g.labels()
        .expect("cut builders require a labeled product graph")
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .collect()
}

fn from_labels(g: &Graph, labels: impl IntoIterator<Item = (u32, u32)>) -> VertexSet {
    let map = label_map(g);
    let mut s = VertexSet::new(g.n());
    for l in labels {
        s.insert(*map.get(&l).expect("label exists in product"));
    }
    s
}

/// The open neighborhood of `seed`, i.e. `N(seed) - seed`. Removing it
/// leaves `seed` as components when `seed` is internally connected.
pub fn neighborhood_cut(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut nb = VertexSet::new(g.n());
    for v in seed.iter() {
        nb.union_with(&g.neighbors(v));
    }
    nb.difference_with(seed);
    nb
}

/// Torus `C_n x C_m`: the neighborhood of the 2x2 block at the origin.
/// Removing it strands the block, whose members keep degree 2.
pub fn torus_block_cut(torus: &Graph) -> (VertexSet, VertexSet) {
    let block = from_labels(torus, [(0, 0), (0, 1), (1, 0), (1, 1)]);
    (neighborhood_cut(torus, &block), block)
}

/// Torus `C_n x C_m`: two whole rows, splitting the torus into two bands
/// of minimum degree 3. Rows 2 and n-1 leave bands of widths 2 and n-4.
pub fn torus_two_rows_cut(torus: &Graph, n: u32, m: u32) -> VertexSet {
    from_labels(
        torus,
        (0..m)
            .map(move |v| (2u32, v))
            .chain((0..m).map(move |v| (n - 1, v))),
    )
}

/// `D_k x P_n`: two center-column vertices plus the second block's second
/// column. Removing it strands the second block's first column, a
/// `K_k` whose members keep degree k-1.
pub fn d_product_cut(product: &Graph, k: u32) -> VertexSet {
    let center = 2 * k;
    let mut labels = vec![(center, 0), (center, 1)];
    for u in k..2 * k {
        labels.push((u, 1));
    }
    from_labels(product, labels)
}

/// `K_n x K_m`: everything in column 0 beyond the first `good+1` rows,
/// plus every later column entry of those rows. Strands a `K_{good+1}`.
pub fn ghc_cut(product: &Graph, n: u32, m: u32, good: u32) -> VertexSet {
    let mut labels: Vec<(u32, u32)> = (good + 1..n).map(|u| (u, 0)).collect();
    for u in 0..=good {
        for j in 1..m {
            labels.push((u, j));
        }
    }
    from_labels(product, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::build;
    use gnd_core::{best_certificate_for_cut, is_gn_cut};

    #[test]
    fn torus_block_cut_certifies_twelve() {
        let g = build("torus:8x8");
        let (cut, block) = torus_block_cut(&g);
        assert_eq!(cut.count(), 8);
        assert!(is_gn_cut(&g, &cut, 2));
        let cert = best_certificate_for_cut(&g, &cut, 2).unwrap();
        assert_eq!(cert.value, 12);
        match cert.kind {
            gnd_core::GcKind::Component { component } => assert_eq!(component, block),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn torus_two_rows_certifies_four_m() {
        let g = build("torus:8x8");
        let cut = torus_two_rows_cut(&g, 8, 8);
        assert_eq!(cut.count(), 16);
        let cert = best_certificate_for_cut(&g, &cut, 3).unwrap();
        assert_eq!(cert.value, 32);
    }

    #[test]
    fn d4_product_cut_certifies_ten() {
        let g = build("prod(D:4,path:4)");
        let cut = d_product_cut(&g, 4);
        assert_eq!(cut.count(), 6);
        let cert = best_certificate_for_cut(&g, &cut, 3).unwrap();
        assert_eq!(cert.value, 10);
    }

    #[test]
    fn d8_product_cut_certifies_fourteen() {
        let g = build("prod(D:8,path:10)");
        let cut = d_product_cut(&g, 8);
        assert_eq!(cut.count(), 10);
        let cert = best_certificate_for_cut(&g, &cut, 3).unwrap();
        assert_eq!(cert.value, 14);
        // the certificate is a balanced split of the stranded K8
        match cert.kind {
            gnd_core::GcKind::Partition { a, b } => {
                assert_eq!(a.count(), 4);
                assert_eq!(b.count(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ghc_cut_certifies_paper_bound() {
        // (g+1)(m-1) + n at g = 1 on K4 x K4 is 10
        let g = build("ghc:4x4");
        let cut = ghc_cut(&g, 4, 4, 1);
        let cert = best_certificate_for_cut(&g, &cut, 1).unwrap();
        assert_eq!(cert.value, 10);
    }
}
