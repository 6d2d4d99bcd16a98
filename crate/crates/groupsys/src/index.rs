//! The index tensor of a windowed system and its triangular subsets.
//!
//! The pair `(k, t)` names the generator slot whose span is `[t, t+k]`. On a
//! window `[t0, t1]` with controllability index `ell`, the index tensor holds
//! every pair with `0 <= k <= ell` and `[t, t+k]` inside the window.
//!
//! The upper triangle at `(k, t)` holds the pairs whose span contains
//! `[t, t+k]`; the lower triangle at `(k, t)` holds the pairs whose span lies
//! inside `[t, t+k]`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A generator slot: span length minus one (`k`) and start time (`t`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexPair {
    /// Span length minus one.
    pub k: usize,
    /// Start time of the span.
    pub t: i64,
}

impl IndexPair {
    /// Creates the pair `(k, t)`.
    pub fn new(k: usize, t: i64) -> Self {
        IndexPair { k, t }
    }

    /// Last time index covered by the span `[t, t+k]`.
    pub fn end(&self) -> i64 {
        self.t + self.k as i64
    }

    /// True when the span of `self` contains the span of `other`.
    pub fn span_contains(&self, other: &IndexPair) -> bool {
        self.t <= other.t && other.end() <= self.end()
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.t)
    }
}

/// Which family of triangles a paired sequence refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// Pairs whose span lies inside the anchor span.
    Lower,
    /// Pairs whose span contains the anchor span.
    Upper,
}

/// Dense layout of the index tensor over a window.
///
/// Pairs are stored ordered by time and then by `k`; tensors over the layout
/// are plain vectors indexed by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexLayout {
    ell: usize,
    t0: i64,
    t1: i64,
    pairs: Vec<IndexPair>,
    position: HashMap<IndexPair, usize>,
}

impl IndexLayout {
    /// Builds the layout for depth `ell + 1` over the window `[t0, t1]`.
    pub fn new(ell: usize, t0: i64, t1: i64) -> Self {
        let mut pairs = Vec::new();
        for t in t0..=t1 {
            for k in 0..=ell {
                if t + k as i64 <= t1 {
                    pairs.push(IndexPair::new(k, t));
                }
            }
        }
        let position = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        IndexLayout {
            ell,
            t0,
            t1,
            pairs,
            position,
        }
    }

    /// Controllability index (depth minus one).
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Window `[t0, t1]`.
    pub fn window(&self) -> (i64, i64) {
        (self.t0, self.t1)
    }

    /// All pairs in layout order.
    pub fn pairs(&self) -> &[IndexPair] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// True when the layout holds no pairs.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Position of a pair in layout order, if the pair is in the window.
    pub fn position(&self, pair: IndexPair) -> Option<usize> {
        self.position.get(&pair).copied()
    }

    /// True when the pair lies in the index tensor.
    pub fn contains(&self, pair: IndexPair) -> bool {
        self.position.contains_key(&pair)
    }

    /// Position of a pair, or an out-of-window error.
    pub fn require(&self, pair: IndexPair) -> Result<usize> {
        self.position(pair)
            .ok_or_else(|| Error::OutOfWindow(format!("index pair {pair}")))
    }

    /// Upper triangle at `anchor`, clipped to the window, in canonical order.
    ///
    /// The canonical order is row-major with the top row (`k = ell`) first and,
    /// within a row, the newest start time first.
    pub fn upper_triangle(&self, anchor: IndexPair) -> Vec<IndexPair> {
        let mut out = Vec::new();
        for kappa in (anchor.k..=self.ell).rev() {
            let lowest = anchor.t - (kappa - anchor.k) as i64;
            for tau in (lowest..=anchor.t).rev() {
                let p = IndexPair::new(kappa, tau);
                if self.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Lower triangle at `anchor`, clipped to the window, in canonical order.
    ///
    /// Rows run from `k = anchor.k` down to zero, newest start time first.
    pub fn lower_triangle(&self, anchor: IndexPair) -> Vec<IndexPair> {
        let mut out = Vec::new();
        for kappa in (0..=anchor.k.min(self.ell)).rev() {
            let last = anchor.end() - kappa as i64;
            for tau in (anchor.t..=last).rev() {
                let p = IndexPair::new(kappa, tau);
                if self.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Triangle of the requested kind.
    pub fn triangle(&self, kind: TriangleKind, anchor: IndexPair) -> Vec<IndexPair> {
        match kind {
            TriangleKind::Lower => self.lower_triangle(anchor),
            TriangleKind::Upper => self.upper_triangle(anchor),
        }
    }

    /// Positions of the pairs active at time `t`, ordered as the time-domain
    /// encoder consumes them: `j = t - tau` ascending, then `k` ascending.
    pub fn time_domain_slots(&self, t: i64) -> Vec<usize> {
        let mut out = Vec::new();
        for j in 0..=self.ell {
            for k in j..=self.ell {
                if let Some(pos) = self.position(IndexPair::new(k, t - j as i64)) {
                    out.push(pos);
                }
            }
        }
        out
    }

    /// Positions of the pairs active at time `t`, ordered as the spectral
    /// encoder consumes them: `k` ascending, then `j` ascending.
    pub fn spectral_slots(&self, t: i64) -> Vec<usize> {
        let mut out = Vec::new();
        for k in 0..=self.ell {
            for j in 0..=k {
                if let Some(pos) = self.position(IndexPair::new(k, t - j as i64)) {
                    out.push(pos);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_upper(layout: &IndexLayout, a: IndexPair) -> Vec<IndexPair> {
        let mut v: Vec<_> = layout
            .pairs()
            .iter()
            .copied()
            .filter(|p| p.span_contains(&a))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn layout_counts_pairs_inside_window() {
        let layout = IndexLayout::new(1, 0, 3);
        assert_eq!(layout.len(), 7);
        assert!(layout.contains(IndexPair::new(1, 2)));
        assert!(!layout.contains(IndexPair::new(1, 3)));
    }

    #[test]
    fn upper_triangle_matches_span_containment() {
        let layout = IndexLayout::new(2, 0, 6);
        for &a in layout.pairs() {
            let mut got = layout.upper_triangle(a);
            got.sort();
            assert_eq!(got, brute_upper(&layout, a), "anchor {a}");
        }
    }

    #[test]
    fn lower_triangle_matches_span_inclusion() {
        let layout = IndexLayout::new(2, 0, 6);
        for &a in layout.pairs() {
            let mut got = layout.lower_triangle(a);
            got.sort();
            let mut want: Vec<_> = layout
                .pairs()
                .iter()
                .copied()
                .filter(|p| a.span_contains(p))
                .collect();
            want.sort();
            assert_eq!(got, want, "anchor {a}");
        }
    }

    #[test]
    fn upper_triangle_order_is_top_row_newest_first() {
        let layout = IndexLayout::new(2, 0, 8);
        let tri = layout.upper_triangle(IndexPair::new(0, 4));
        let expect = vec![
            IndexPair::new(2, 4),
            IndexPair::new(2, 3),
            IndexPair::new(2, 2),
            IndexPair::new(1, 4),
            IndexPair::new(1, 3),
            IndexPair::new(0, 4),
        ];
        assert_eq!(tri, expect);
    }

    #[test]
    fn slot_orders_cover_active_pairs() {
        let layout = IndexLayout::new(2, 0, 8);
        let mut a = layout.time_domain_slots(4);
        let mut b = layout.spectral_slots(4);
        let mut c: Vec<_> = layout
            .upper_triangle(IndexPair::new(0, 4))
            .into_iter()
            .map(|p| layout.position(p).unwrap())
            .collect();
        a.sort();
        b.sort();
        c.sort();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}
