//! Fixed-width vertex sets backed by `u64` words.
//!
//! A [`VertexSet`] is the universal currency of every search in this crate:
//! fault sets, cuts, components, and partition sides are all bit rows of the
//! same width as the graph they belong to. Bits above `width` are kept zero
//! at all times so whole-word operations never need masking on read.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    width: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(width: usize) -> usize {
    width.div_ceil(64)
}

impl VertexSet {
    /// Empty set of the given width.
    pub fn new(width: usize) -> Self {
        VertexSet {
            width,
            words: vec![0; word_count(width)],
        }
    }

    /// Full set `{0, .., width-1}`.
    pub fn full(width: usize) -> Self {
        let mut s = Self::new(width);
        for w in 0..s.words.len() {
            s.words[w] = !0u64;
        }
        s.trim();
        s
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(width: usize, ids: I) -> Self {
        let mut s = Self::new(width);
        for id in ids {
            s.insert(id as usize);
        }
        s
    }

    pub fn singleton(width: usize, id: usize) -> Self {
        let mut s = Self::new(width);
        s.insert(id);
        s
    }

    /// Clears bits above `width`; internal invariant maintenance.
    #[inline]
    fn trim(&mut self) {
        let rem = self.width % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        debug_assert!(id < self.width);
        self.words[id / 64] >> (id % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, id: usize) {
        assert!(id < self.width, "vertex {id} out of range {}", self.width);
        self.words[id / 64] |= 1u64 << (id % 64);
    }

    #[inline]
    pub fn remove(&mut self, id: usize) {
        assert!(id < self.width, "vertex {id} out of range {}", self.width);
        self.words[id / 64] &= !(1u64 << (id % 64));
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    fn check_width(&self, other: &VertexSet) {
        assert_eq!(
            self.width, other.width,
            "vertex set width mismatch: {} vs {}",
            self.width, other.width
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        s
    }

    /// Complement within `{0, .., width-1}`.
    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// True iff some contained id is strictly below `bound`.
    pub fn any_below(&self, bound: usize) -> bool {
        let bound = bound.min(self.width);
        let full = bound / 64;
        if self.words[..full].iter().any(|&w| w != 0) {
            return true;
        }
        let rem = bound % 64;
        rem != 0 && self.words[full] & ((1u64 << rem) - 1) != 0
    }

    /// Smallest contained vertex id, if any.
    pub fn min_id(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates contained ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
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

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().map(|v| v as u32).collect()
    }

    /// Lexicographic order on the sorted id sequences: `{0,5} < {1,2}` and
    /// `{1} < {1,3}`. Below the lowest differing id the two sets agree, so
    /// the holder of that id wins unless the other set has nothing beyond
    /// the shared prefix (then it is a proper prefix and comes first).
    /// Used for deterministic witness tie-breaking.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        self.check_width(other);
        for i in 0..self.words.len() {
            let (a, b) = (self.words[i], other.words[i]);
            let diff = a ^ b;
            if diff == 0 {
                continue;
            }
            let d = diff.trailing_zeros();
            let tail_nonempty = |word: u64, words: &[u64]| {
                (word >> d >> 1) != 0 || words[i + 1..].iter().any(|&w| w != 0)
            };
            return if a >> d & 1 == 1 {
                if tail_nonempty(b, &other.words) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            } else if tail_nonempty(a, &self.words) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        Ordering::Equal
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
