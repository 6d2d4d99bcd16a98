//! Paired sequences, sawtooth partitions, filling sequences and normal chains.
//!
//! A paired sequence lists anchors of lower triangles, none contained in
//! another. Its complementary sequence lists anchors of upper triangles that
//! cover exactly the pairs the lower triangles miss. Filling sequences walk
//! the index tensor one pair at a time; a walk whose every prefix is a union
//! of lower triangles yields a normal chain of the generator group.

mod filling;
mod normal;
mod report;

pub use filling::{
    is_normal_filling_sequence, normal_orderings, parse_walk, standard_filling, FillingKind, FillingSequence,
    NormalityCheck, OrderingList,
};
pub use normal::{
    block_code_chains, chain_product, eigentriangle_expansion, normal_chain, normal_chain_seeded,
    normal_subgroup_from_ps, oplus_group, reconstruct_from_chain, BlockCodeChains, ChainStep, EigenStep,
    EigentriangleChain, NormalChain, OplusGroup,
};
pub use report::{parse_chain_report, write_chain_report, ReportStep};

use std::collections::BTreeSet;

use crate::index::{IndexLayout, IndexPair, TriangleKind};

/// An ordered list of triangle anchors of one kind, none contained in another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedSequence {
    /// Whether the anchors name lower or upper triangles.
    pub kind: TriangleKind,
    /// Anchors in order.
    pub pairs: Vec<IndexPair>,
}

impl PairedSequence {
    /// The empty sequence of the given kind.
    pub fn empty(kind: TriangleKind) -> Self {
        PairedSequence { kind, pairs: Vec::new() }
    }

    /// Number of anchors.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// True when there are no anchors.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The set of pairs covered by the triangles, clipped to the layout.
    pub fn covered(&self, layout: &IndexLayout) -> BTreeSet<IndexPair> {
        covered(layout, self.kind, &self.pairs)
    }
}

fn covered(layout: &IndexLayout, kind: TriangleKind, pairs: &[IndexPair]) -> BTreeSet<IndexPair> {
    pairs.iter().flat_map(|&p| layout.triangle(kind, p)).collect()
}

/// Drops every anchor whose triangle lies inside another anchor's triangle.
///
/// Containment is inclusion of the clipped pair sets. The order of the
/// surviving anchors is kept, and of several anchors with equal triangles
/// only the first survives. Anchors outside the layout are dropped.
pub fn purge(layout: &IndexLayout, kind: TriangleKind, pairs: &[IndexPair]) -> PairedSequence {
    let pairs: Vec<IndexPair> = pairs.iter().copied().filter(|&p| layout.contains(p)).collect();
    let sets: Vec<BTreeSet<IndexPair>> = pairs.iter().map(|&p| layout.triangle(kind, p).into_iter().collect()).collect();
    let keep = (0..pairs.len())
        .filter(|&i| {
            !(0..pairs.len()).any(|j| {
                j != i && sets[i].is_subset(&sets[j]) && (sets[i] != sets[j] || j < i)
            })
        })
        .map(|i| pairs[i])
        .collect();
    PairedSequence { kind, pairs: keep }
}

/// The complementary paired sequence of the opposite kind.
///
/// For a lower sequence the result is the purged list of upper triangles at
/// every pair the lower triangles miss; each of those upper triangles avoids
/// the lower union, so together they cover exactly the missing pairs. The
/// upper-to-lower direction is symmetric.
pub fn complementary(layout: &IndexLayout, ps: &PairedSequence) -> PairedSequence {
    let filled = ps.covered(layout);
    let other = match ps.kind {
        TriangleKind::Lower => TriangleKind::Upper,
        TriangleKind::Upper => TriangleKind::Lower,
    };
    let missing: Vec<IndexPair> = layout.pairs().iter().copied().filter(|p| !filled.contains(p)).collect();
    purge(layout, other, &missing)
}

/// True when the lower triangles of `lower` and the upper triangles of
/// `upper` are disjoint and together cover the index tensor.
pub fn is_sawtooth_partition(layout: &IndexLayout, lower: &PairedSequence, upper: &PairedSequence) -> bool {
    let l = covered(layout, TriangleKind::Lower, &lower.pairs);
    let u = covered(layout, TriangleKind::Upper, &upper.pairs);
    l.is_disjoint(&u) && l.len() + u.len() == layout.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, t: i64) -> IndexPair {
        IndexPair::new(k, t)
    }

    #[test]
    fn purge_examples() {
        let layout = IndexLayout::new(1, 0, 3);
        assert!(purge(&layout, TriangleKind::Lower, &[]).is_empty());
        let ps = purge(&layout, TriangleKind::Lower, &[p(1, 0), p(0, 0)]);
        assert_eq!(ps.pairs, vec![p(1, 0)]);
        let ps = purge(&layout, TriangleKind::Lower, &[p(0, 0), p(1, 0)]);
        assert_eq!(ps.pairs, vec![p(1, 0)]);
        let ps = purge(&layout, TriangleKind::Lower, &[p(1, 2), p(0, 0)]);
        assert_eq!(ps.pairs, vec![p(1, 2), p(0, 0)]);
        let ps = purge(&layout, TriangleKind::Lower, &[p(0, 1), p(0, 1)]);
        assert_eq!(ps.pairs, vec![p(0, 1)]);
    }

    #[test]
    fn complement_of_a_single_pair() {
        let layout = IndexLayout::new(2, 0, 5);
        let ps = purge(&layout, TriangleKind::Lower, &[p(2, 2)]);
        let comp = complementary(&layout, &ps);
        assert_eq!(comp.kind, TriangleKind::Upper);
        assert_eq!(comp.pairs, vec![p(0, 0), p(0, 1), p(0, 5)]);
        assert!(is_sawtooth_partition(&layout, &ps, &comp));
    }

    #[test]
    fn complement_extremes() {
        let layout = IndexLayout::new(1, 0, 3);
        let everything = purge(&layout, TriangleKind::Lower, layout.pairs());
        assert!(complementary(&layout, &everything).is_empty());
        let empty = PairedSequence::empty(TriangleKind::Lower);
        let comp = complementary(&layout, &empty);
        assert_eq!(comp.covered(&layout).len(), layout.len());
        let back = complementary(&layout, &comp);
        assert!(back.is_empty());
    }

    #[test]
    fn upper_to_lower_direction_partitions_too() {
        let layout = IndexLayout::new(2, 0, 4);
        let upper = purge(&layout, TriangleKind::Upper, &[p(1, 1), p(0, 4)]);
        let lower = complementary(&layout, &upper);
        assert!(is_sawtooth_partition(&layout, &lower, &upper));
    }
}
