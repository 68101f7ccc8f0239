//! Constructors for the named graph families and the Cartesian product.

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Default bound on the number of vertices any constructor may produce.
/// All search kernels assume bit rows of modest width.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

/// A buildable description of a named graph.
///
/// The compact text form accepted by [`FamilySpec::from_str`] is
/// `path:N`, `cycle:N`, `clique:N`, `grid:NxM`, `torus:NxM`, `ghc:NxM`,
/// `D:N`, `F:N,G`, `H:N,R,G`, and `prod(SPEC,SPEC)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(u32),
    Cycle(u32),
    Clique(u32),
    Grid(u32, u32),
    Torus(u32, u32),
    /// Two-dimensional generalized hypercube `K_n x K_m`.
    GenHypercube(u32, u32),
    /// Two disjoint `K_n` plus a new vertex adjacent to one vertex of each.
    D(u32),
    /// Disjoint `K_{g+1}` and `K_{n-g-1}` joined by one bridge edge.
    F { n: u32, g: u32 },
    /// Two connected g-regular parts of orders `floor((n-r)/2)` and
    /// `ceil((n-r)/2)` plus `r` degree-2 middle vertices.
    H { n: u32, r: u32, g: u32 },
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self, cap: usize) -> Result<Graph> {
        let g = match self {
            FamilySpec::Path(n) => path(*n as usize, cap)?,
            FamilySpec::Cycle(n) => cycle(*n as usize, cap)?,
            FamilySpec::Clique(n) => clique(*n as usize, cap)?,
            FamilySpec::Grid(n, m) => {
                cartesian_product(&path(*n as usize, cap)?, &path(*m as usize, cap)?, cap)?
            }
            FamilySpec::Torus(n, m) => {
                cartesian_product(&cycle(*n as usize, cap)?, &cycle(*m as usize, cap)?, cap)?
            }
            FamilySpec::GenHypercube(n, m) => {
                if *n < 2 || *m < 2 {
                    return Err(Error::InvalidFamily(
                        "generalized hypercube requires n, m >= 2".into(),
                    ));
                }
                cartesian_product(&clique(*n as usize, cap)?, &clique(*m as usize, cap)?, cap)?
            }
            FamilySpec::D(n) => d_graph(*n as usize, cap)?,
            FamilySpec::F { n, g } => f_graph(*n as usize, *g as usize, cap)?,
            FamilySpec::H { n, r, g } => h_graph(*n as usize, *r as usize, *g as usize, cap)?,
            FamilySpec::Product(a, b) => {
                let ga = a.build(cap)?;
                let gb = b.build(cap)?;
                cartesian_product(&ga, &gb, cap)?
            }
        };
        Ok(g)
    }
}

pub fn make_family(spec: &FamilySpec, cap: usize) -> Result<Graph> {
    spec.build(cap)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::VertexCapExceeded { n, cap });
    }
    Ok(())
}

fn path(n: usize, cap: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidFamily("path requires n >= 1".into()));
    }
    check_cap(n, cap)?;
    let edges: Vec<_> = (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

fn cycle(n: usize, cap: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily("cycle requires n >= 3".into()));
    }
    check_cap(n, cap)?;
    let mut edges: Vec<_> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n as u32 - 1));
    Graph::from_edges(n, &edges)
}

fn clique(n: usize, cap: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidFamily("clique requires n >= 1".into()));
    }
    check_cap(n, cap)?;
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `D_n`: cliques on `0..n` and `n..2n`, plus a center vertex `2n` adjacent
/// to the lowest-id vertex of each clique.
fn d_graph(n: usize, cap: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidFamily("D requires n >= 1".into()));
    }
    let total = 2 * n + 1;
    check_cap(total, cap)?;
    let mut edges = Vec::new();
    for base in [0u32, n as u32] {
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((base + u, base + v));
            }
        }
    }
    edges.push((0, 2 * n as u32));
    edges.push((n as u32, 2 * n as u32));
    Graph::from_edges(total, &edges)
}

/// `F_n`: `K_{g+1}` on `0..=g` and `K_{n-g-1}` on `g+1..n`, bridged by the
/// edge between the lowest-id vertex of each block.
fn f_graph(n: usize, g: usize, cap: usize) -> Result<Graph> {
    if n < 2 * g + 3 {
        return Err(Error::InvalidFamily(format!(
            "F requires n >= 2g+3 (got n={n}, g={g})"
        )));
    }
    check_cap(n, cap)?;
    let a = g + 1;
    let mut edges = Vec::new();
    for u in 0..a as u32 {
        for v in u + 1..a as u32 {
            edges.push((u, v));
        }
    }
    for u in a as u32..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    edges.push((0, a as u32));
    Graph::from_edges(n, &edges)
}

/// Connected g-regular circulant: offsets `1..=g/2` plus the antipodal
/// chord when `g` is odd. A g-regular graph of odd order with odd `g`
/// does not exist.
pub fn circulant(order: usize, g: usize) -> Result<Graph> {
    if order == 0 || g + 1 > order {
        return Err(Error::InvalidFamily(format!(
            "circulant requires order >= g+1 (got order={order}, g={g})"
        )));
    }
    if g % 2 == 1 && order % 2 == 1 {
        return Err(Error::InfeasibleRegularPart { order, g });
    }
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut add = |a: usize, b: usize| {
        let (a, b) = (a.min(b) as u32, a.max(b) as u32);
        edges.insert((a, b));
    };
    for i in 0..order {
        for d in 1..=g / 2 {
            add(i, (i + d) % order);
        }
        if g % 2 == 1 {
            add(i, (i + order / 2) % order);
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(order, &edges)
}

/// `H_n(r, g)`: circulant parts on `0..o1` and `o1..o1+o2`, plus `r` middle
/// vertices each adjacent to exactly vertex `0` and vertex `o1`.
fn h_graph(n: usize, r: usize, g: usize, cap: usize) -> Result<Graph> {
    if r < 1 || n <= r {
        return Err(Error::InvalidFamily("H requires 1 <= r < n".into()));
    }
    let o2 = (n - r).div_ceil(2);
    let o1 = (n - r) / 2;
    if g < 3 || g + 1 > o2 {
        return Err(Error::InvalidFamily(format!(
            "H requires 3 <= g <= ceil((n-r)/2)-1 (got n={n}, r={r}, g={g})"
        )));
    }
    if g + 1 > o1 {
        return Err(Error::InvalidFamily(format!(
            "H part of order {o1} cannot be {g}-regular"
        )));
    }
    check_cap(n, cap)?;
    let p1 = circulant(o1, g)?;
    let p2 = circulant(o2, g)?;
    let mut edges = p1.edges();
    for (u, v) in p2.edges() {
        edges.push((u + o1 as u32, v + o1 as u32));
    }
    for i in 0..r {
        let center = (o1 + o2 + i) as u32;
        edges.push((0, center));
        edges.push((o1 as u32, center));
    }
    Graph::from_edges(n, &edges)
}

/// Cartesian product: `(u,v) ~ (u',v')` iff `u = u'` and `vv'` is an edge of
/// `h`, or `v = v'` and `uu'` is an edge of `g`. Vertices are ordered
/// row-major (`u`-major) and labeled with their coordinates.
pub fn cartesian_product(g: &Graph, h: &Graph, cap: usize) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n().checked_mul(h.n()).ok_or(Error::VertexCapExceeded {
        n: usize::MAX,
        cap,
    })?;
    check_cap(n, cap)?;
    let m = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + h.n() * g.edge_count());
    for u in 0..g.n() as u32 {
        for (v, v2) in h.edges() {
            edges.push((u * m as u32 + v, u * m as u32 + v2));
        }
    }
    for (u, u2) in g.edges() {
        for v in 0..h.n() as u32 {
            edges.push((u * m as u32 + v, u2 * m as u32 + v));
        }
    }
    edges.sort_unstable();
    let mut labels = Vec::with_capacity(n);
    for u in 0..g.n() as u32 {
        for v in 0..h.n() as u32 {
            labels.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?.with_labels(labels))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Clique(n) => write!(f, "clique:{n}"),
            FamilySpec::Grid(n, m) => write!(f, "grid:{n}x{m}"),
            FamilySpec::Torus(n, m) => write!(f, "torus:{n}x{m}"),
            FamilySpec::GenHypercube(n, m) => write!(f, "ghc:{n}x{m}"),
            FamilySpec::D(n) => write!(f, "D:{n}"),
            FamilySpec::F { n, g } => write!(f, "F:{n},{g}"),
            FamilySpec::H { n, r, g } => write!(f, "H:{n},{r},{g}"),
            FamilySpec::Product(a, b) => write!(f, "prod({a},{b})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let err = |msg: &str| Error::FamilyParse(format!("{msg} (in `{s}`)"));
        if let Some(rest) = s
            .strip_prefix("prod(")
            .or_else(|| s.strip_prefix("product("))
        {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| err("missing closing parenthesis"))?;
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = split.ok_or_else(|| err("product needs two operands"))?;
            let a = inner[..i].parse()?;
            let b = inner[i + 1..].parse()?;
            return Ok(FamilySpec::Product(Box::new(a), Box::new(b)));
        }
        let (kind, params) = s.split_once(':').ok_or_else(|| err("expected kind:params"))?;
        let ints = |sep: char| -> Result<Vec<u32>> {
            params
                .split(sep)
                .map(|p| p.trim().parse::<u32>().map_err(|_| err("bad integer")))
                .collect()
        };
        let one = || -> Result<u32> {
            params.trim().parse::<u32>().map_err(|_| err("bad integer"))
        };
        match kind {
            "path" => Ok(FamilySpec::Path(one()?)),
            "cycle" => Ok(FamilySpec::Cycle(one()?)),
            "clique" => Ok(FamilySpec::Clique(one()?)),
            "grid" | "torus" | "ghc" | "gen-hypercube" => {
                let v = ints('x')?;
                if v.len() != 2 {
                    return Err(err("expected NxM"));
                }
                Ok(match kind {
                    "grid" => FamilySpec::Grid(v[0], v[1]),
                    "torus" => FamilySpec::Torus(v[0], v[1]),
                    _ => FamilySpec::GenHypercube(v[0], v[1]),
                })
            }
            "D" | "d" => Ok(FamilySpec::D(one()?)),
            "F" | "f" => {
                let v = ints(',')?;
                if v.len() != 2 {
                    return Err(err("F expects n,g"));
                }
                Ok(FamilySpec::F { n: v[0], g: v[1] })
            }
            "H" | "h" => {
                let v = ints(',')?;
                if v.len() != 3 {
                    return Err(err("H expects n,r,g"));
                }
                Ok(FamilySpec::H {
                    n: v[0],
                    r: v[1],
                    g: v[2],
                })
            }
            _ => Err(err("unknown family kind")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_p2_p2_is_a_four_cycle() {
        let p2 = FamilySpec::Path(2).build(64).unwrap();
        let g = cartesian_product(&p2, &p2, 64).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn grid_5x5_counts() {
        let g = FamilySpec::Grid(5, 5).build(4096).unwrap();
        assert_eq!(g.n(), 25);
        assert_eq!(g.edge_count(), 40);
    }

    #[test]
    fn product_degree_identity() {
        let k3 = FamilySpec::Clique(3).build(64).unwrap();
        let c4 = FamilySpec::Cycle(4).build(64).unwrap();
        let p = cartesian_product(&k3, &c4, 64).unwrap();
        for (id, &(u, v)) in p.labels().unwrap().iter().enumerate() {
            assert_eq!(
                p.degree(id),
                k3.degree(u as usize) + c4.degree(v as usize)
            );
        }
    }

    #[test]
    fn product_commutative_degree_multiset() {
        let d4 = FamilySpec::D(4).build(4096).unwrap();
        let p3 = FamilySpec::Path(3).build(4096).unwrap();
        let a = cartesian_product(&d4, &p3, 4096).unwrap();
        let b = cartesian_product(&p3, &d4, 4096).unwrap();
        let mut da: Vec<_> = (0..a.n()).map(|v| a.degree(v)).collect();
        let mut db: Vec<_> = (0..b.n()).map(|v| b.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        assert_eq!(da, db);
        assert_eq!(a.edge_count(), b.edge_count());
    }

    #[test]
    fn product_cap_enforced() {
        let k8 = FamilySpec::Clique(8).build(64).unwrap();
        assert!(matches!(
            cartesian_product(&k8, &k8, 63),
            Err(Error::VertexCapExceeded { n: 64, cap: 63 })
        ));
    }

    #[test]
    fn d4_shape() {
        let g = FamilySpec::D(4).build(64).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.degree(8), 2);
        // both blocks are 4-cliques
        for base in [0usize, 4] {
            for u in base..base + 4 {
                for v in u + 1..base + 4 {
                    assert!(g.has_edge(u, v));
                }
            }
        }
        assert!(g.has_edge(0, 8) && g.has_edge(4, 8));
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn f7_shape() {
        let g = FamilySpec::F { n: 7, g: 2 }.build(64).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 3 + 6 + 1);
        assert!(g.has_edge(0, 3));
    }

    #[test]
    fn f_rejects_small_n() {
        assert!(FamilySpec::F { n: 8, g: 3 }.build(64).is_err());
    }

    #[test]
    fn h_center_degrees() {
        let g = FamilySpec::H { n: 22, r: 2, g: 3 }.build(64).unwrap();
        assert_eq!(g.n(), 22);
        assert_eq!(g.degree(20), 2);
        assert_eq!(g.degree(21), 2);
        // parts are 3-regular; the two attachment vertices also carry the
        // r center edges
        for v in 0..20 {
            let expected = if v == 0 || v == 10 { 5 } else { 3 };
            assert_eq!(g.degree(v), expected, "v={v}");
        }
        assert!(g.is_connected());
    }

    #[test]
    fn h_odd_part_with_odd_degree_is_infeasible() {
        // (n-r)/2 = 9 on both sides; a 3-regular graph of order 9 cannot exist.
        assert!(matches!(
            FamilySpec::H { n: 20, r: 2, g: 3 }.build(64),
            Err(Error::InfeasibleRegularPart { order: 9, g: 3 })
        ));
    }

    #[test]
    fn circulant_regular_and_connected() {
        for (order, g) in [(9, 4), (10, 3), (8, 3), (12, 5), (7, 6)] {
            let c = circulant(order, g).unwrap();
            assert!(c.is_connected(), "order={order} g={g}");
            for v in 0..order {
                assert_eq!(c.degree(v), g, "order={order} g={g} v={v}");
            }
        }
        assert!(circulant(9, 3).is_err());
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "path:5",
            "cycle:8",
            "clique:4",
            "grid:5x5",
            "torus:8x8",
            "ghc:4x4",
            "D:4",
            "F:9,3",
            "H:22,2,3",
            "prod(D:4,path:5)",
            "prod(prod(path:2,path:2),cycle:3)",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("grid:5".parse::<FamilySpec>().is_err());
        assert!("blob:5".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn product_label_decomposition() {
        // Coordinate-block identity: the label set (X1 ∪ X2) x (Y1 ∪ Y2)
        // equals the union of the four block products.
        let g = FamilySpec::Cycle(5).build(64).unwrap();
        let h = FamilySpec::Path(4).build(64).unwrap();
        let p = cartesian_product(&g, &h, 64).unwrap();
        let labels = p.labels().unwrap();
        let block = |xs: &[u32], ys: &[u32]| -> crate::VertexSet {
            let ids = labels
                .iter()
                .enumerate()
                .filter(|(_, (u, v))| xs.contains(u) && ys.contains(v))
                .map(|(i, _)| i as u32)
                .collect::<Vec<_>>();
            crate::VertexSet::from_ids(p.n(), ids)
        };
        let (x1, x2) = (vec![0u32, 2], vec![3u32]);
        let (y1, y2) = (vec![0u32], vec![2u32, 3]);
        let whole = block(&[x1.clone(), x2.clone()].concat(), &[y1.clone(), y2.clone()].concat());
        let mut pieces = block(&x1, &y1);
        pieces.union_with(&block(&x1, &y2));
        pieces.union_with(&block(&x2, &y1));
        pieces.union_with(&block(&x2, &y2));
        assert_eq!(whole, pieces);
    }
}
