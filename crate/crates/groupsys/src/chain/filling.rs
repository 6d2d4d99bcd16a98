//! Filling sequences of the index tensor.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use super::{purge, PairedSequence};
use crate::error::{Error, Result};
use crate::index::{IndexLayout, IndexPair, TriangleKind};
use crate::text::Lines;

/// A walk visiting every pair of the index tensor exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingSequence {
    /// Pairs in the order they are filled.
    pub walk: Vec<IndexPair>,
}

impl FillingSequence {
    /// Checks that `walk` is a permutation of the layout's pairs.
    pub fn new(layout: &IndexLayout, walk: Vec<IndexPair>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &p in &walk {
            if !layout.contains(p) {
                return Err(Error::InvalidFilling(format!("{p} is outside the index tensor")));
            }
            if !seen.insert(p) {
                return Err(Error::InvalidFilling(format!("{p} is filled twice")));
            }
        }
        if seen.len() != layout.len() {
            let missing = layout.pairs().iter().find(|p| !seen.contains(p)).expect("some pair is missing");
            return Err(Error::InvalidFilling(format!("{missing} is never filled")));
        }
        Ok(FillingSequence { walk })
    }
}

/// The four standard walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FillingKind {
    /// Start times descending, spans ascending within a start time.
    TimeRev,
    /// End times ascending, spans ascending within an end time.
    TimeFwd,
    /// Rows of equal span, shortest first, start times descending.
    SpecRev,
    /// Rows of equal span, shortest first, start times ascending.
    SpecFwd,
}

impl FillingKind {
    /// All four kinds.
    pub const ALL: [FillingKind; 4] = [
        FillingKind::TimeRev,
        FillingKind::TimeFwd,
        FillingKind::SpecRev,
        FillingKind::SpecFwd,
    ];
}

impl fmt::Display for FillingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FillingKind::TimeRev => "time_rev",
            FillingKind::TimeFwd => "time_fwd",
            FillingKind::SpecRev => "spec_rev",
            FillingKind::SpecFwd => "spec_fwd",
        };
        f.write_str(name)
    }
}

impl FromStr for FillingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FillingKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown filling `{s}`")))
    }
}

/// One of the four standard walks over the layout.
pub fn standard_filling(layout: &IndexLayout, kind: FillingKind) -> FillingSequence {
    let mut walk = layout.pairs().to_vec();
    match kind {
        FillingKind::TimeRev => walk.sort_by_key(|p| (std::cmp::Reverse(p.t), p.k)),
        FillingKind::TimeFwd => walk.sort_by_key(|p| (p.end(), p.k)),
        FillingKind::SpecRev => walk.sort_by_key(|p| (p.k, std::cmp::Reverse(p.t))),
        FillingKind::SpecFwd => walk.sort_by_key(|p| (p.k, p.t)),
    }
    FillingSequence { walk }
}

/// Outcome of [`is_normal_filling_sequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityCheck {
    /// True when every prefix is a union of lower triangles.
    pub normal: bool,
    /// Length of the first prefix that is not.
    pub first_violation: Option<usize>,
}

/// Checks that every prefix of the walk is a union of lower triangles.
///
/// Each prefix is decomposed into its purged set of lower triangles, taking
/// every filled pair as a candidate anchor; the prefix passes when the union
/// of those triangles is exactly the filled set.
pub fn is_normal_filling_sequence(layout: &IndexLayout, f: &FillingSequence) -> NormalityCheck {
    first_non_lower_prefix(layout, &BTreeSet::new(), &f.walk)
}

pub(crate) fn first_non_lower_prefix(layout: &IndexLayout, base: &BTreeSet<IndexPair>, walk: &[IndexPair]) -> NormalityCheck {
    let mut filled = base.clone();
    for (i, &p) in walk.iter().enumerate() {
        filled.insert(p);
        let anchors: Vec<IndexPair> = filled.iter().copied().collect();
        let decomposition: PairedSequence = purge(layout, TriangleKind::Lower, &anchors);
        if decomposition.covered(layout) != filled {
            return NormalityCheck {
                normal: false,
                first_violation: Some(i + 1),
            };
        }
    }
    NormalityCheck {
        normal: true,
        first_violation: None,
    }
}

/// A capped list of walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingList {
    /// The walks found, in lexicographic order of layout positions.
    pub orderings: Vec<Vec<IndexPair>>,
    /// True when the cap stopped the enumeration early.
    pub truncated: bool,
}

/// Enumerates the orders of filling `pairs` in which every prefix is a union
/// of lower triangles, up to `cap` walks.
///
/// `pairs` must itself be a union of lower triangles.
pub fn normal_orderings(layout: &IndexLayout, pairs: &[IndexPair], cap: usize) -> OrderingList {
    let set: BTreeSet<IndexPair> = pairs.iter().copied().collect();
    let needs: Vec<Vec<IndexPair>> = set
        .iter()
        .map(|&p| layout.lower_triangle(p).into_iter().filter(|&q| q != p).collect())
        .collect();
    let items: Vec<IndexPair> = set.into_iter().collect();
    let mut out = OrderingList {
        orderings: Vec::new(),
        truncated: false,
    };
    let mut used = vec![false; items.len()];
    let mut filled = HashSet::new();
    let mut walk = Vec::with_capacity(items.len());
    extend_orderings(&items, &needs, cap, &mut used, &mut filled, &mut walk, &mut out);
    out
}

fn extend_orderings(
    items: &[IndexPair],
    needs: &[Vec<IndexPair>],
    cap: usize,
    used: &mut [bool],
    filled: &mut HashSet<IndexPair>,
    walk: &mut Vec<IndexPair>,
    out: &mut OrderingList,
) {
    if out.truncated {
        return;
    }
    if walk.len() == items.len() {
        if out.orderings.len() == cap {
            out.truncated = true;
        } else {
            out.orderings.push(walk.clone());
        }
        return;
    }
    for i in 0..items.len() {
        if used[i] || !needs[i].iter().all(|q| filled.contains(q)) {
            continue;
        }
        used[i] = true;
        filled.insert(items[i]);
        walk.push(items[i]);
        extend_orderings(items, needs, cap, used, filled, walk, out);
        walk.pop();
        filled.remove(&items[i]);
        used[i] = false;
    }
}

/// Parses a walk: whitespace-separated pairs written `k,t` or `(k,t)`.
pub fn parse_walk(layout: &IndexLayout, text: &str) -> Result<FillingSequence> {
    let mut walk = Vec::new();
    for line in Lines::new(text) {
        for tok in &line.tokens {
            let inner = tok.trim_start_matches('(').trim_end_matches(')');
            let bad = || Error::parse(line.number, format!("cannot parse pair `{tok}`"));
            let (k, t) = inner.split_once(',').ok_or_else(bad)?;
            walk.push(IndexPair::new(k.parse().map_err(|_| bad())?, t.parse().map_err(|_| bad())?));
        }
    }
    FillingSequence::new(layout, walk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, t: i64) -> IndexPair {
        IndexPair::new(k, t)
    }

    #[test]
    fn standard_walks_on_a_small_window() {
        let layout = IndexLayout::new(1, 0, 2);
        let walk = |k| standard_filling(&layout, k).walk;
        assert_eq!(walk(FillingKind::TimeRev), vec![p(0, 2), p(0, 1), p(1, 1), p(0, 0), p(1, 0)]);
        assert_eq!(walk(FillingKind::TimeFwd), vec![p(0, 0), p(0, 1), p(1, 0), p(0, 2), p(1, 1)]);
        assert_eq!(walk(FillingKind::SpecRev), vec![p(0, 2), p(0, 1), p(0, 0), p(1, 1), p(1, 0)]);
        assert_eq!(walk(FillingKind::SpecFwd), vec![p(0, 0), p(0, 1), p(0, 2), p(1, 0), p(1, 1)]);
    }

    #[test]
    fn standard_walks_are_normal_and_stable() {
        for (ell, t1) in [(0, 3), (1, 3), (2, 5), (3, 4)] {
            let layout = IndexLayout::new(ell, 0, t1);
            for kind in FillingKind::ALL {
                let f = standard_filling(&layout, kind);
                assert!(FillingSequence::new(&layout, f.walk.clone()).is_ok());
                assert!(is_normal_filling_sequence(&layout, &f).normal, "{kind} ell={ell}");
                assert_eq!(f, standard_filling(&layout, kind));
            }
        }
    }

    #[test]
    fn depth_one_walks_agree_pairwise() {
        let layout = IndexLayout::new(0, 0, 3);
        let f = |k| standard_filling(&layout, k);
        assert_eq!(f(FillingKind::TimeRev), f(FillingKind::SpecRev));
        assert_eq!(f(FillingKind::TimeFwd), f(FillingKind::SpecFwd));
    }

    #[test]
    fn starting_with_a_long_span_is_not_normal() {
        let layout = IndexLayout::new(1, 0, 2);
        let mut walk = standard_filling(&layout, FillingKind::SpecFwd).walk;
        walk.retain(|&q| q != p(1, 0));
        walk.insert(0, p(1, 0));
        let f = FillingSequence::new(&layout, walk).unwrap();
        let check = is_normal_filling_sequence(&layout, &f);
        assert!(!check.normal);
        assert_eq!(check.first_violation, Some(1));
    }

    #[test]
    fn invalid_walks_are_rejected() {
        let layout = IndexLayout::new(1, 0, 2);
        assert!(FillingSequence::new(&layout, vec![p(0, 0)]).is_err());
        assert!(FillingSequence::new(&layout, vec![p(0, 0); 5]).is_err());
        assert!(parse_walk(&layout, "0,0 (0,1) 1,0 0,2\n1,1\n").is_ok());
        assert!(matches!(parse_walk(&layout, "0;0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn orderings_are_exactly_the_normal_walks() {
        let layout = IndexLayout::new(1, 0, 2);
        let list = normal_orderings(&layout, layout.pairs(), 10_000);
        assert!(!list.truncated);
        let mut brute = 0;
        let pairs = layout.pairs().to_vec();
        let mut perm: Vec<usize> = (0..pairs.len()).collect();
        permute(&mut perm, 0, &mut |perm| {
            let f = FillingSequence { walk: perm.iter().map(|&i| pairs[i]).collect() };
            if is_normal_filling_sequence(&layout, &f).normal {
                brute += 1;
                assert!(list.orderings.contains(&f.walk));
            }
        });
        assert_eq!(brute, list.orderings.len());
        let capped = normal_orderings(&layout, layout.pairs(), 3);
        assert_eq!(capped.orderings.len(), 3);
        assert!(capped.truncated);
    }

    fn permute(v: &mut Vec<usize>, i: usize, visit: &mut impl FnMut(&[usize])) {
        if i == v.len() {
            visit(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            permute(v, i + 1, visit);
            v.swap(i, j);
        }
    }
}
