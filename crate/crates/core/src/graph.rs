//! Immutable undirected simple graphs with dense per-vertex bit rows.

use crate::error::Error;
use crate::set::VertexSet;
use crate::Result;
use std::fmt::Write as _;

/// An immutable undirected simple graph.
///
/// Vertex ids are dense integers `0..n`. The adjacency of vertex `u` is a
/// bit row of width `n`; rows are symmetric and loop-free by construction.
/// `labels`, when present, records the coordinate pair of each vertex of a
/// Cartesian product; labels are metadata only and never consulted by
/// algorithms.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    deg: Vec<u32>,
    m: usize,
    labels: Option<Vec<(u32, u32)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-loops, and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let words = n.div_ceil(64).max(1);
        let mut adj = vec![0u64; n * words];
        let mut deg = vec![0u32; n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::EdgeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (u, v) = (u as usize, v as usize);
            if adj[u * words + v / 64] >> (v % 64) & 1 == 1 {
                return Err(Error::DuplicateEdge(u as u32, v as u32));
            }
            adj[u * words + v / 64] |= 1u64 << (v % 64);
            adj[v * words + u / 64] |= 1u64 << (u % 64);
            deg[u] += 1;
            deg[v] += 1;
        }
        Ok(Graph {
            n,
            words,
            adj,
            deg,
            m: edges.len(),
            labels: None,
        })
    }

    pub(crate) fn with_labels(mut self, labels: Vec<(u32, u32)>) -> Graph {
        assert_eq!(labels.len(), self.n, "labels must cover every vertex");
        debug_assert!(
            {
                let mut sorted = labels.clone();
                sorted.sort_unstable();
                sorted.windows(2).all(|w| w[0] != w[1])
            },
            "labels must be pairwise distinct"
        );
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn word_count(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.deg[u] as usize
    }

    pub fn min_degree(&self) -> usize {
        self.deg.iter().copied().min().unwrap_or(0) as usize
    }

    pub fn max_degree(&self) -> usize {
        self.deg.iter().copied().max().unwrap_or(0) as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn labels(&self) -> Option<&[(u32, u32)]> {
        self.labels.as_deref()
    }

    /// Neighbors of `u` as a fresh set.
    pub fn neighbors(&self, u: usize) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        s.words_mut().copy_from_slice(self.row(u));
        s
    }

    pub fn neighbors_iter(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors_iter(u) {
                if v > u {
                    out.push((u as u32, v as u32));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.m == self.n * (self.n - 1) / 2
    }

    fn check_width(&self, s: &VertexSet) {
        assert_eq!(
            s.width(),
            self.n,
            "vertex set width {} does not match graph order {}",
            s.width(),
            self.n
        );
    }

    /// Connected components of `G - x`, sorted by (size, then smallest
    /// contained vertex id). Empty result iff `x = V`.
    pub fn components_after_removal(&self, x: &VertexSet) -> Vec<VertexSet> {
        self.check_width(x);
        let alive = x.complement();
        let mut unvisited = alive.clone();
        let mut comps = Vec::new();
        while let Some(start) = unvisited.min_id() {
            let comp = self.reach(start, &alive);
            unvisited.difference_with(&comp);
            comps.push(comp);
        }
        comps.sort_by(|a, b| {
            a.count()
                .cmp(&b.count())
                .then_with(|| a.min_id().cmp(&b.min_id()))
        });
        comps
    }

    /// Vertices reachable from `start` inside the `alive` mask.
    fn reach(&self, start: usize, alive: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new(self.n);
        comp.insert(start);
        let mut frontier = comp.clone();
        let mut next = VertexSet::new(self.n);
        while !frontier.is_empty() {
            next.clear();
            for u in frontier.iter() {
                let row = self.row(u);
                for (w, &word) in next.words_mut().iter_mut().zip(row) {
                    *w |= word;
                }
            }
            next.intersect_with(alive);
            next.difference_with(&comp);
            comp.union_with(&next);
            std::mem::swap(&mut frontier, &mut next);
        }
        comp
    }

    /// True iff `G - removed` is connected (the empty graph counts as
    /// connected; a single component is connected).
    pub fn is_connected_after_removal(&self, removed: &VertexSet) -> bool {
        self.check_width(removed);
        let alive = removed.complement();
        match alive.min_id() {
            None => true,
            Some(start) => self.reach(start, &alive).count() == alive.count(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.is_connected_after_removal(&VertexSet::new(self.n))
    }

    /// Minimum over `v` in `s` of `|N(v) ∩ s|`; `None` when `s` is empty.
    pub fn induced_min_degree(&self, s: &VertexSet) -> Option<usize> {
        self.check_width(s);
        let mut min: Option<usize> = None;
        for v in s.iter() {
            let d: usize = self
                .row(v)
                .iter()
                .zip(s.words())
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            min = Some(min.map_or(d, |m| m.min(d)));
        }
        min
    }

    /// True iff some edge of the graph has one end in `a` and the other in
    /// `b`. Overlapping vertices contribute nothing (no self-loops exist).
    pub fn has_edge_between(&self, a: &VertexSet, b: &VertexSet) -> bool {
        self.check_width(a);
        self.check_width(b);
        for u in a.iter() {
            if self
                .row(u)
                .iter()
                .zip(b.words())
                .any(|(x, y)| x & y != 0)
            {
                return true;
            }
        }
        false
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// Parses the edge-list text format: first non-comment line `n m`, then
    /// `m` lines `u v` with `0 <= u < v < n`. Lines starting with `#` are
    /// comments.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse_err = |msg: &str| Error::Parse {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let a: u64 = parts
                .next()
                .ok_or_else(|| parse_err("missing field"))?
                .parse()
                .map_err(|_| parse_err("not a decimal integer"))?;
            let b: u64 = parts
                .next()
                .ok_or_else(|| parse_err("missing field"))?
                .parse()
                .map_err(|_| parse_err("not a decimal integer"))?;
            if parts.next().is_some() {
                return Err(parse_err("trailing tokens"));
            }
            match header {
                None => header = Some((a as usize, b as usize)),
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(parse_err("more edges than declared"));
                    }
                    if a >= b {
                        return Err(parse_err("edges must satisfy u < v"));
                    }
                    if b as usize >= n {
                        return Err(parse_err("endpoint out of range"));
                    }
                    edges.push((a as u32, b as u32));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing header".to_string(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    /// Serializes to the edge-list format with edges sorted ascending, so
    /// that parse/write round-trips are byte-identical.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn clique(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n as u32 - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::EdgeOutOfRange(..))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn components_path_interior_removal() {
        let g = path(4);
        let comps = g.components_after_removal(&VertexSet::from_ids(4, [1]));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0]);
        assert_eq!(comps[1].to_vec(), vec![2, 3]);
    }

    #[test]
    fn components_clique_stays_connected() {
        let g = clique(5);
        let comps = g.components_after_removal(&VertexSet::from_ids(5, [0, 1]));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].to_vec(), vec![2, 3, 4]);
    }

    #[test]
    fn components_remove_everything() {
        let g = path(3);
        assert!(g.components_after_removal(&VertexSet::full(3)).is_empty());
    }

    #[test]
    fn induced_min_degree_cases() {
        let g = clique(4);
        assert_eq!(g.induced_min_degree(&VertexSet::full(4)), Some(3));
        let g = cycle(6);
        assert_eq!(
            g.induced_min_degree(&VertexSet::from_ids(6, [0, 1, 2])),
            Some(1)
        );
        assert_eq!(g.induced_min_degree(&VertexSet::new(6)), None);
    }

    #[test]
    fn edge_between() {
        let g = path(4);
        let a = VertexSet::from_ids(4, [0]);
        let b = VertexSet::from_ids(4, [1]);
        let c = VertexSet::from_ids(4, [3]);
        assert!(g.has_edge_between(&a, &b));
        assert!(!g.has_edge_between(&a, &c));
        let g = cycle(6);
        let a = VertexSet::from_ids(6, [0, 1]);
        let b = VertexSet::from_ids(6, [3, 4]);
        assert!(!g.has_edge_between(&a, &b));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5);
        let text = g.to_edge_list();
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(h.to_edge_list(), text);
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn edge_list_parses_comments() {
        let text = "# a comment\n3 2\n0 1\n# interior\n1 2\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_rejections() {
        assert!(Graph::parse_edge_list("3 1\n1 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n1 0\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }
}
