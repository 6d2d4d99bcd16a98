//! Subgroups as sorted element sets, with closure, normality and set products.

use std::collections::HashSet;

use super::GroupOps;
use crate::error::{Error, Result};

/// A subgroup of some parent group, stored as a sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// The subgroup holding only the identity.
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    /// The whole parent group.
    pub fn whole(g: &impl GroupOps) -> Self {
        Subgroup {
            members: (0..g.order()).collect(),
        }
    }

    /// Wraps an element set that is already known to be a subgroup.
    pub(crate) fn from_sorted_unchecked(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    /// Validates that `members` is a subgroup of `g`.
    pub fn new(g: &impl GroupOps, members: Vec<usize>) -> Result<Self> {
        let s = Self::from_sorted_unchecked(members);
        if let Some(&bad) = s.members.iter().find(|&&x| x >= g.order()) {
            return Err(Error::NotASubgroup(format!("element {bad} out of range")));
        }
        if !s.contains(0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &s.members {
            if !s.contains(g.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &s.members {
                if !s.contains(g.op(a, b)) {
                    return Err(Error::NotASubgroup(format!("product of {a} and {b} missing")));
                }
            }
        }
        Ok(s)
    }

    /// Sorted element indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Membership test.
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// True when every element of `self` lies in `other`.
    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Intersection of two subgroups of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    /// Position of `x` within the sorted member list.
    pub fn rank(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    /// The subgroup as a standalone group, elements numbered by member rank.
    pub fn to_group(&self, g: &impl GroupOps, name: &str) -> Result<super::FiniteGroup> {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                let c = g.op(a, b);
                table.push(
                    self.rank(c)
                        .ok_or_else(|| Error::NotASubgroup(format!("product of {a} and {b} missing")))?,
                );
            }
        }
        super::FiniteGroup::from_flat(name, n, table)
    }
}

/// Smallest subgroup of `g` containing `seeds`, found by saturating products.
pub fn subgroup_closure(g: &impl GroupOps, seeds: &[usize]) -> Subgroup {
    let gens: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
    let mut seen: HashSet<usize> = HashSet::from([0]);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            let y = g.op(x, s);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    Subgroup::from_sorted_unchecked(seen.into_iter().collect())
}

/// A small generating set of the subgroup `h`, chosen greedily in index order.
pub fn generating_set(g: &impl GroupOps, h: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial();
    for &x in h.members() {
        if !span.contains(x) {
            gens.push(x);
            span = subgroup_closure(g, &gens);
            if span.order() == h.order() {
                break;
            }
        }
    }
    gens
}

/// True when `h` is normal in the whole group `g`.
pub fn is_normal(g: &impl GroupOps, h: &Subgroup) -> Result<bool> {
    is_normal_in(g, &Subgroup::whole(g), h)
}

/// True when `h` is a subgroup of `within` that is normal in `within`.
///
/// Conjugation is checked for every element of `within` against a generating
/// set of `h`, which is exhaustive because conjugation is an automorphism.
pub fn is_normal_in(g: &impl GroupOps, within: &Subgroup, h: &Subgroup) -> Result<bool> {
    if !h.is_subset(within) {
        return Err(Error::NotASubgroup("not contained in the ambient subgroup".into()));
    }
    Ok(normality_witness(g, within, h).is_none())
}

/// First `(element, conjugator)` pair whose conjugate leaves `h`, if any.
pub(crate) fn normality_witness(g: &impl GroupOps, within: &Subgroup, h: &Subgroup) -> Option<(usize, usize)> {
    let gens = generating_set(g, h);
    for &a in within.members() {
        let ai = g.inv(a);
        for &x in &gens {
            if !h.contains(g.op(g.op(a, x), ai)) {
                return Some((x, a));
            }
        }
    }
    None
}

/// The set product `h1·h2`.
///
/// The product is a subgroup whenever one factor is normal; otherwise closure
/// is checked and a violation is reported with a witness pair.
pub fn product_of_subgroups(g: &impl GroupOps, h1: &Subgroup, h2: &Subgroup) -> Result<Subgroup> {
    let mut set: HashSet<usize> = HashSet::with_capacity(h1.order() * h2.order() / h1.intersect(h2).order());
    for &a in h1.members() {
        for &b in h2.members() {
            set.insert(g.op(a, b));
        }
    }
    let product = Subgroup::from_sorted_unchecked(set.into_iter().collect());
    let mut gens = generating_set(g, h1);
    gens.extend(generating_set(g, h2));
    for &x in &gens {
        for &y in product.members() {
            if !product.contains(g.op(y, x)) {
                return Err(Error::NotASubgroupResult { a: y, b: x });
            }
        }
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, FiniteGroup};

    fn closure_oracle(g: &FiniteGroup, seeds: &[usize]) -> Vec<usize> {
        let mut set: Vec<usize> = vec![0];
        set.extend_from_slice(seeds);
        loop {
            let mut next = set.clone();
            for &a in &set {
                for &b in &set {
                    next.push(g.op(a, b));
                }
            }
            next.sort_unstable();
            next.dedup();
            if next == set {
                return set;
            }
            set = next;
        }
    }

    #[test]
    fn closure_of_nothing_is_trivial() {
        let g = FiniteGroup::cyclic(2);
        assert_eq!(subgroup_closure(&g, &[]).members(), &[0]);
    }

    #[test]
    fn closure_in_z4() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(subgroup_closure(&g, &[2]).members(), closure_oracle(&g, &[2]).as_slice());
        assert_eq!(subgroup_closure(&g, &[2]).members(), &[0, 2]);
    }

    #[test]
    fn closure_of_transposition_in_s3() {
        let g = FiniteGroup::symmetric3();
        let h = subgroup_closure(&g, &[1]);
        assert_eq!(h.order(), 2);
        assert_eq!(h.members(), closure_oracle(&g, &[1]).as_slice());
    }

    #[test]
    fn normality_in_s3() {
        let g = FiniteGroup::symmetric3();
        let two = subgroup_closure(&g, &[1]);
        let three = subgroup_closure(&g, &[3]);
        assert!(!is_normal(&g, &two).unwrap());
        assert!(is_normal(&g, &three).unwrap());
    }

    #[test]
    fn every_subgroup_of_abelian_group_is_normal() {
        let g = FiniteGroup::cyclic(12);
        for s in 0..12 {
            assert!(is_normal(&g, &subgroup_closure(&g, &[s])).unwrap());
        }
    }

    #[test]
    fn products_of_subgroups() {
        let z4 = FiniteGroup::cyclic(4);
        let h = subgroup_closure(&z4, &[2]);
        assert_eq!(product_of_subgroups(&z4, &h, &Subgroup::trivial()).unwrap(), h);
        assert_eq!(product_of_subgroups(&z4, &h, &h).unwrap(), h);
        let v = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).group;
        let a = subgroup_closure(&v, &[1]);
        let b = subgroup_closure(&v, &[2]);
        assert_eq!(product_of_subgroups(&v, &a, &b).unwrap().order(), 4);
    }

    #[test]
    fn product_of_two_transposition_subgroups_is_not_a_subgroup() {
        let g = FiniteGroup::symmetric3();
        let a = subgroup_closure(&g, &[1]);
        let b = subgroup_closure(&g, &[2]);
        assert!(matches!(
            product_of_subgroups(&g, &a, &b),
            Err(Error::NotASubgroupResult { .. })
        ));
    }

    #[test]
    fn subgroup_validation() {
        let g = FiniteGroup::cyclic(4);
        assert!(Subgroup::new(&g, vec![0, 1]).is_err());
        assert!(Subgroup::new(&g, vec![0, 2]).is_ok());
    }
}
