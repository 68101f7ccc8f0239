//! PMC test assignments, syndromes, and distinguishability of fault sets.
//!
//! Under the PMC model every vertex tests each of its neighbors. A
//! fault-free tester reports its neighbor's true status; a faulty tester
//! reports arbitrarily. Two fault sets are distinguishable when no complete
//! outcome assignment (syndrome) is consistent with both.
//!
//! The production path is [`distinguishable_criterion`]: `F1` and `F2` are
//! distinguishable iff some edge joins their symmetric difference to a
//! vertex outside `F1 ∪ F2`. The exhaustive [`distinguishable_oracle`]
//! enumerates every syndrome and exists solely to cross-check the
//! criterion on small graphs.

use crate::error::Error;
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::Result;

/// Hard guard on the syndrome space: the oracle enumerates `2^(2|E|)`
/// syndromes, so `2|E|` may not exceed this.
pub const MAX_ORACLE_ARCS: usize = 30;

/// The complete test assignment of a graph: one directed arc per edge per
/// direction, ordered by (tester, tested) ascending.
#[derive(Clone, Debug)]
pub struct TestAssignment {
    arcs: Vec<(u32, u32)>,
}

impl TestAssignment {
    pub fn of(graph: &Graph) -> TestAssignment {
        let mut arcs = Vec::with_capacity(2 * graph.edge_count());
        for u in 0..graph.n() {
            for v in graph.neighbors_iter(u) {
                arcs.push((u as u32, v as u32));
            }
        }
        TestAssignment { arcs }
    }

    #[inline]
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// True iff `sigma` can arise when exactly the vertices of `f` are
    /// faulty: every arc whose tester is fault-free must report exactly
    /// whether the tested vertex is faulty. Arcs with a faulty tester are
    /// unconstrained.
    pub fn is_consistent(&self, sigma: &Syndrome, f: &VertexSet) -> bool {
        assert_eq!(sigma.len(), self.arcs.len(), "syndrome/arc count mismatch");
        self.arcs.iter().enumerate().all(|(i, &(u, v))| {
            f.contains(u as usize) || sigma.get(i) == f.contains(v as usize)
        })
    }

    /// The consistent syndromes of `f` form a subcube: arcs with fault-free
    /// testers are forced, the rest are free. Returns (forced mask, forced
    /// values) over the low `len()` bits. Requires `len() <= 64`.
    fn forced_bits(&self, f: &VertexSet) -> (u64, u64) {
        debug_assert!(self.arcs.len() <= 64);
        let mut mask = 0u64;
        let mut value = 0u64;
        for (i, &(u, v)) in self.arcs.iter().enumerate() {
            if !f.contains(u as usize) {
                mask |= 1 << i;
                if f.contains(v as usize) {
                    value |= 1 << i;
                }
            }
        }
        (mask, value)
    }
}

/// A complete assignment of 0/1 outcomes to the arcs of a test assignment,
/// indexed by arc position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syndrome {
    bits: Vec<u64>,
    len: usize,
}

impl Syndrome {
    pub fn zeros(len: usize) -> Syndrome {
        Syndrome {
            bits: vec![0; len.div_ceil(64).max(1)],
            len,
        }
    }

    /// Builds a syndrome from the low `len` bits of `mask`.
    pub fn from_mask(mask: u64, len: usize) -> Syndrome {
        assert!(len <= 64);
        let mut s = Syndrome::zeros(len);
        s.bits[0] = mask & if len == 64 { !0 } else { (1 << len) - 1 };
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.bits[i / 64] |= 1 << (i % 64);
        } else {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }
}

fn check_pair(graph: &Graph, f1: &VertexSet, f2: &VertexSet) -> Result<()> {
    assert_eq!(f1.width(), graph.n(), "f1 width mismatch");
    assert_eq!(f2.width(), graph.n(), "f2 width mismatch");
    if f1 == f2 {
        return Err(Error::EqualFaultSets);
    }
    Ok(())
}

/// Closed-form distinguishability: true iff some edge joins `F1 Δ F2` to
/// the complement of `F1 ∪ F2`.
pub fn distinguishable_criterion(graph: &Graph, f1: &VertexSet, f2: &VertexSet) -> Result<bool> {
    check_pair(graph, f1, f2)?;
    let sym = f1.symmetric_difference(f2);
    let outside = f1.union(f2).complement();
    Ok(graph.has_edge_between(&sym, &outside))
}

/// Exhaustive distinguishability: enumerates all `2^(2|E|)` syndromes and
/// reports true iff none is consistent with both fault sets. Guarded by
/// [`MAX_ORACLE_ARCS`].
pub fn distinguishable_oracle(graph: &Graph, f1: &VertexSet, f2: &VertexSet) -> Result<bool> {
    check_pair(graph, f1, f2)?;
    let ta = TestAssignment::of(graph);
    let arcs = ta.len();
    if arcs > MAX_ORACLE_ARCS {
        return Err(Error::SyndromeSpaceTooLarge {
            arcs,
            max: MAX_ORACLE_ARCS,
        });
    }
    let (m1, v1) = ta.forced_bits(f1);
    let (m2, v2) = ta.forced_bits(f2);
    for sigma in 0u64..1u64 << arcs {
        if sigma & m1 == v1 && sigma & m2 == v2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of syndromes consistent with `f` (exhaustive; same size guard as
/// the oracle). Test instrumentation.
pub fn count_consistent(graph: &Graph, f: &VertexSet) -> Result<u64> {
    let ta = TestAssignment::of(graph);
    let arcs = ta.len();
    if arcs > MAX_ORACLE_ARCS {
        return Err(Error::SyndromeSpaceTooLarge {
            arcs,
            max: MAX_ORACLE_ARCS,
        });
    }
    let mut count = 0;
    for sigma in 0u64..1u64 << arcs {
        if ta.is_consistent(&Syndrome::from_mask(sigma, arcs), f) {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        spec.build(64).unwrap()
    }

    #[test]
    fn consistency_p2() {
        let g = build(FamilySpec::Path(2));
        let ta = TestAssignment::of(&g);
        assert_eq!(ta.arcs(), &[(0, 1), (1, 0)]);
        let none = VertexSet::new(2);
        let all_zero = Syndrome::from_mask(0b00, 2);
        assert!(ta.is_consistent(&all_zero, &none));
        // fault-free tester 0 must report faulty neighbor 1
        let f = VertexSet::from_ids(2, [1]);
        assert!(!ta.is_consistent(&all_zero, &f));
        let mut sig = Syndrome::zeros(2);
        sig.set(0, true);
        assert!(ta.is_consistent(&sig, &f));
    }

    #[test]
    fn consistency_count_p3_middle_faulty() {
        let g = build(FamilySpec::Path(3));
        // arcs from the faulty middle vertex are free: 2^2 of 2^4 syndromes
        let f = VertexSet::from_ids(3, [1]);
        assert_eq!(count_consistent(&g, &f).unwrap(), 4);
    }

    #[test]
    fn all_faulty_consistent_with_everything() {
        let g = build(FamilySpec::Cycle(4));
        let ta = TestAssignment::of(&g);
        let all = VertexSet::full(4);
        for mask in 0..1u64 << ta.len() {
            assert!(ta.is_consistent(&Syndrome::from_mask(mask, ta.len()), &all));
        }
    }

    #[test]
    fn criterion_examples() {
        let g = build(FamilySpec::Path(3));
        let f1 = VertexSet::from_ids(3, [0]);
        let f2 = VertexSet::from_ids(3, [2]);
        assert!(distinguishable_criterion(&g, &f1, &f2).unwrap());
        let f1 = VertexSet::from_ids(3, [0, 1]);
        let f2 = VertexSet::from_ids(3, [1, 2]);
        assert!(!distinguishable_criterion(&g, &f1, &f2).unwrap());
        let g = build(FamilySpec::Cycle(4));
        let f1 = VertexSet::from_ids(4, [0]);
        let f2 = VertexSet::from_ids(4, [0, 2]);
        assert!(distinguishable_criterion(&g, &f1, &f2).unwrap());
    }

    #[test]
    fn criterion_rejects_equal_sets() {
        let g = build(FamilySpec::Path(3));
        let f = VertexSet::from_ids(3, [0]);
        assert!(matches!(
            distinguishable_criterion(&g, &f, &f),
            Err(Error::EqualFaultSets)
        ));
    }

    #[test]
    fn oracle_examples() {
        let g = build(FamilySpec::Path(3));
        let f1 = VertexSet::from_ids(3, [0, 1]);
        let f2 = VertexSet::from_ids(3, [1, 2]);
        assert!(!distinguishable_oracle(&g, &f1, &f2).unwrap());
        let f1 = VertexSet::from_ids(3, [0]);
        let f2 = VertexSet::from_ids(3, [2]);
        assert!(distinguishable_oracle(&g, &f1, &f2).unwrap());
        let g = build(FamilySpec::Path(2));
        let f1 = VertexSet::from_ids(2, [0]);
        let f2 = VertexSet::from_ids(2, [1]);
        // the all-ones syndrome is consistent with both
        assert!(!distinguishable_oracle(&g, &f1, &f2).unwrap());
    }

    #[test]
    fn oracle_size_guard() {
        // 2|E| = 30 is exactly at the guard; a 4x4 grid (48 arcs) exceeds it
        let g = build(FamilySpec::Clique(6));
        assert_eq!(TestAssignment::of(&g).len(), 30);
        let g2 = FamilySpec::Grid(4, 4).build(64).unwrap();
        let f1 = VertexSet::from_ids(16, [0]);
        let f2 = VertexSet::from_ids(16, [1]);
        assert!(matches!(
            distinguishable_oracle(&g2, &f1, &f2),
            Err(Error::SyndromeSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn forced_bits_agree_with_is_consistent() {
        let g = build(FamilySpec::Cycle(5));
        let ta = TestAssignment::of(&g);
        for fmask in 0u32..1 << 5 {
            let f = VertexSet::from_ids(5, (0..5u32).filter(|i| fmask >> i & 1 == 1));
            let (m, v) = ta.forced_bits(&f);
            for sigma in 0u64..1 << ta.len() {
                assert_eq!(
                    sigma & m == v,
                    ta.is_consistent(&Syndrome::from_mask(sigma, ta.len()), &f)
                );
            }
        }
    }

    #[test]
    fn oracle_matches_criterion_on_small_graphs() {
        for spec in [
            FamilySpec::Path(4),
            FamilySpec::Cycle(5),
            FamilySpec::Clique(4),
        ] {
            let g = build(spec);
            let n = g.n();
            for a in 0u32..1 << n {
                for b in 0u32..1 << n {
                    if a == b {
                        continue;
                    }
                    let f1 = VertexSet::from_ids(n, (0..n as u32).filter(|i| a >> i & 1 == 1));
                    let f2 = VertexSet::from_ids(n, (0..n as u32).filter(|i| b >> i & 1 == 1));
                    let c = distinguishable_criterion(&g, &f1, &f2).unwrap();
                    let o = distinguishable_oracle(&g, &f1, &f2).unwrap();
                    assert_eq!(c, o, "mismatch on {f1:?} vs {f2:?}");
                }
            }
        }
    }

    #[test]
    fn criterion_symmetry() {
        let g = build(FamilySpec::Cycle(6));
        let f1 = VertexSet::from_ids(6, [0, 2]);
        let f2 = VertexSet::from_ids(6, [1]);
        assert_eq!(
            distinguishable_criterion(&g, &f1, &f2).unwrap(),
            distinguishable_criterion(&g, &f2, &f1).unwrap()
        );
    }
}
