//! Seeded verification corpora: named families at small parameters plus
//! random connected graphs and random trees. All generation is
//! deterministic in the seed.

use gnd_core::{FamilySpec, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn build(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .expect("corpus spec parses")
        .build(gnd_core::DEFAULT_VERTEX_CAP)
        .expect("corpus spec builds")
}

/// Named families at small parameters, used across the property checks.
pub fn named_families() -> Vec<(String, Graph)> {
    let specs = [
        "path:4", "path:5", "path:7", "cycle:4", "cycle:5", "cycle:6", "cycle:8", "clique:4",
        "clique:5", "grid:2x3", "grid:2x4", "grid:3x3", "ghc:3x3", "F:5,1", "F:7,2", "F:9,3",
        "D:3", "D:4",
    ];
    specs.iter().map(|s| (s.to_string(), build(s))).collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("random edges are valid")
}

/// Connected random graph by rejection; the rng stream keeps this
/// deterministic for a fixed seed.
fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// `count` seeded random connected graphs with orders in `n_min..=n_max`,
/// sweeping edge probabilities.
pub fn random_connected_graphs(
    seed: u64,
    count: usize,
    n_min: usize,
    n_max: usize,
) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sweep = [0.3, 0.45, 0.6, 0.8];
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = n_min + rng.random_range(0..=(n_max - n_min));
        let p = sweep[i % sweep.len()];
        let g = random_connected(&mut rng, n, p);
        out.push((format!("rand:n={n},p={p},i={i}"), g));
    }
    out
}

/// Random tree from a uniform Prüfer sequence.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n <= 2 {
        let edges: Vec<(u32, u32)> = if n == 2 { vec![(0, 1)] } else { vec![] };
        return Graph::from_edges(n, &edges).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1u32; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // smallest-leaf decoding
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf.min(v) as u32, leaf.max(v) as u32));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a.min(b) as u32, a.max(b) as u32));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_trees(seed: u64, count: usize, n_min: usize, n_max: usize) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = n_min + rng.random_range(0..=(n_max - n_min));
            (format!("tree:n={n},i={i}"), random_tree(&mut rng, n))
        })
        .collect()
}

/// Corpus slice for the PMC criterion/oracle sweep: connected graphs with
/// at most 6 vertices and at most 7 edges (so the full syndrome space has
/// at most 2^14 points), at least `min_count` of them.
pub fn pmc_corpus(seed: u64, min_count: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = named_families()
        .into_iter()
        .filter(|(_, g)| g.n() <= 6 && g.edge_count() <= 7)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x706d63);
    let mut i = 0;
    while out.len() < min_count {
        let n = 3 + rng.random_range(0..=3);
        let p = [0.35, 0.5, 0.65][i % 3];
        let g = random_connected(&mut rng, n, p);
        if g.edge_count() <= 7 {
            out.push((format!("pmc-rand:n={n},i={i}"), g));
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic() {
        let a = random_connected_graphs(7, 10, 4, 9);
        let b = random_connected_graphs(7, 10, 4, 9);
        for ((ida, ga), (idb, gb)) in a.iter().zip(&b) {
            assert_eq!(ida, idb);
            assert_eq!(ga.to_edge_list(), gb.to_edge_list());
        }
        assert!(a.iter().all(|(_, g)| g.is_connected()));
    }

    #[test]
    fn trees_are_trees() {
        for (_, t) in random_trees(3, 20, 4, 10) {
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), t.n() - 1);
        }
    }

    #[test]
    fn pmc_corpus_respects_bounds() {
        let c = pmc_corpus(1, 200);
        assert!(c.len() >= 200);
        for (_, g) in &c {
            assert!(g.n() <= 6 && g.edge_count() <= 7 && g.is_connected());
        }
    }
}
