//! Quotient groups with canonical coset representatives.

use std::collections::HashMap;

use super::subgroup::normality_witness;
use super::{FiniteGroup, GroupOps, Homomorphism, Subgroup};
use crate::error::{Error, Result};

/// A quotient `numerator / normal_subgroup` inside some parent group.
///
/// Cosets are listed in order of their least element, which is also the
/// coset representative; coset 0 is the normal subgroup itself.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    numerator: Subgroup,
    normal_subgroup: Subgroup,
    cosets: Vec<Vec<usize>>,
    coset_of: HashMap<usize, usize>,
    quotient: FiniteGroup,
}

impl QuotientPresentation {
    /// The group being divided.
    pub fn numerator(&self) -> &Subgroup {
        &self.numerator
    }

    /// The normal subgroup divided out.
    pub fn normal_subgroup(&self) -> &Subgroup {
        &self.normal_subgroup
    }

    /// Cosets as sorted element lists, in representative order.
    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Least element of each coset.
    pub fn representatives(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    /// The quotient as a standalone group; element `i` is coset `i`.
    pub fn quotient(&self) -> &FiniteGroup {
        &self.quotient
    }

    /// Order of the quotient.
    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    /// True when the quotient has one element.
    pub fn is_trivial(&self) -> bool {
        self.cosets.len() == 1
    }

    /// Coset holding `x`, or `None` if `x` is outside the numerator.
    pub fn project(&self, x: usize) -> Option<usize> {
        self.coset_of.get(&x).copied()
    }

    /// The projection as a homomorphism, when the numerator is a whole [`FiniteGroup`].
    pub fn projection(&self, parent: &FiniteGroup) -> Result<Homomorphism> {
        if self.numerator.order() != parent.order() {
            return Err(Error::PreconditionViolated(
                "projection needs the numerator to be the whole parent".into(),
            ));
        }
        let image = (0..parent.order())
            .map(|x| self.project(x).expect("numerator is whole group"))
            .collect();
        Homomorphism::new(parent, &self.quotient, image)
    }
}

/// Quotient of the whole group `g` by the normal subgroup `h`.
pub fn quotient(g: &impl GroupOps, h: &Subgroup) -> Result<QuotientPresentation> {
    quotient_within(g, &Subgroup::whole(g), h)
}

/// Quotient `n / d` of two subgroups of `g`, where `d` is normal in `n`.
pub fn quotient_within(g: &impl GroupOps, n: &Subgroup, d: &Subgroup) -> Result<QuotientPresentation> {
    if !d.is_subset(n) {
        return Err(Error::NotASubgroup("divisor is not contained in the numerator".into()));
    }
    if let Some((element, by)) = normality_witness(g, n, d) {
        return Err(Error::NotNormal { element, by });
    }
    let mut coset_of: HashMap<usize, usize> = HashMap::with_capacity(n.order());
    let mut cosets = Vec::new();
    for &x in n.members() {
        if coset_of.contains_key(&x) {
            continue;
        }
        let id = cosets.len();
        let mut coset: Vec<usize> = d.members().iter().map(|&y| g.op(x, y)).collect();
        coset.sort_unstable();
        for &y in &coset {
            coset_of.insert(y, id);
        }
        cosets.push(coset);
    }
    let m = cosets.len();
    let mut table = Vec::with_capacity(m * m);
    for a in &cosets {
        for b in &cosets {
            table.push(coset_of[&g.op(a[0], b[0])]);
        }
    }
    let quotient = FiniteGroup::from_flat("quotient", m, table)?;
    Ok(QuotientPresentation {
        numerator: n.clone(),
        normal_subgroup: d.clone(),
        cosets,
        coset_of,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroup_closure;

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = FiniteGroup::symmetric3();
        let q = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert!(q.is_trivial());
    }

    #[test]
    fn z4_mod_two() {
        let g = FiniteGroup::cyclic(4);
        let h = subgroup_closure(&g, &[2]);
        let q = quotient(&g, &h).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.cosets(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(q.representatives(), vec![0, 1]);
        let p = q.projection(&g).unwrap();
        assert_eq!(p.kernel().members(), &[0, 2]);
    }

    #[test]
    fn s3_mod_a3() {
        let g = FiniteGroup::symmetric3();
        let a3 = subgroup_closure(&g, &[3]);
        let q = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.order() * a3.order(), g.order());
    }

    #[test]
    fn non_normal_quotient_is_rejected() {
        let g = FiniteGroup::symmetric3();
        let h = subgroup_closure(&g, &[1]);
        assert!(matches!(quotient(&g, &h), Err(Error::NotNormal { .. })));
    }
}
