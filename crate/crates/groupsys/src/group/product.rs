//! Direct and subdirect products.

use super::{FiniteGroup, GroupOps, Homomorphism, Subgroup};
use crate::error::{Error, Result};

/// A direct product `g1 × g2` with its coordinate projections.
///
/// The pair `(a, b)` is element `a·|g2| + b`.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    /// The product group.
    pub group: FiniteGroup,
    /// Projection onto the first factor.
    pub first: Homomorphism,
    /// Projection onto the second factor.
    pub second: Homomorphism,
}

impl DirectProduct {
    /// Element index of the pair `(a, b)`.
    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.second.codomain().order() + b
    }

    /// Coordinates of an element.
    pub fn split(&self, x: usize) -> (usize, usize) {
        let m = self.second.codomain().order();
        (x / m, x % m)
    }
}

/// Direct product of two groups, pairs ordered lexicographically.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> DirectProduct {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let a = g1.op(x / n2, y / n2);
            let b = g2.op(x % n2, y % n2);
            table.push(a * n2 + b);
        }
    }
    let name = format!("{}x{}", g1.name(), g2.name());
    let group = FiniteGroup::from_flat(&name, n, table).expect("direct product of groups is a group");
    let first = Homomorphism::new(&group, g1, (0..n).map(|x| x / n2).collect()).expect("projection");
    let second = Homomorphism::new(&group, g2, (0..n).map(|x| x % n2).collect()).expect("projection");
    DirectProduct { group, first, second }
}

/// Subdirect product `{(a, b) : p1(a) = p2(b)}` of two groups over a common quotient.
#[derive(Debug, Clone)]
pub struct SubdirectProduct {
    /// The ambient direct product.
    pub product: DirectProduct,
    /// The subdirect product as a subgroup of the direct product.
    pub subgroup: Subgroup,
    /// The subdirect product as a standalone group, elements in subgroup order.
    pub group: FiniteGroup,
    /// Coordinates of each element of `group`.
    pub pairs: Vec<(usize, usize)>,
}

/// Forms the subdirect product of `g1` and `g2` along `p1: g1 → C` and `p2: g2 → C`.
///
/// Both projections must be onto the same group `C`; the result is checked to
/// project onto each factor.
pub fn subdirect_product(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    p1: &Homomorphism,
    p2: &Homomorphism,
) -> Result<SubdirectProduct> {
    if !p1.domain().same_table(g1) || !p2.domain().same_table(g2) {
        return Err(Error::PreconditionViolated("projection domains differ from the factors".into()));
    }
    if !p1.codomain().same_table(p2.codomain()) {
        return Err(Error::CodomainMismatch);
    }
    for p in [p1, p2] {
        if let Some(missing) = p.missing_from_image() {
            return Err(Error::NotSurjective { missing });
        }
    }
    let product = direct_product(g1, g2);
    let mut members = Vec::new();
    for a in 0..g1.order() {
        for b in 0..g2.order() {
            if p1.apply(a) == p2.apply(b) {
                members.push(product.pair(a, b));
            }
        }
    }
    let subgroup = Subgroup::new(&product.group, members)?;
    let name = format!("{}^{}", g1.name(), g2.name());
    let group = subgroup.to_group(&product.group, &name)?;
    let pairs: Vec<(usize, usize)> = subgroup.members().iter().map(|&x| product.split(x)).collect();
    for (factor, order) in [(0usize, g1.order()), (1, g2.order())] {
        let mut hit = vec![false; order];
        for &(a, b) in &pairs {
            hit[if factor == 0 { a } else { b }] = true;
        }
        if let Some(missing) = hit.iter().position(|h| !h) {
            return Err(Error::NotSurjective { missing });
        }
    }
    Ok(SubdirectProduct {
        product,
        subgroup,
        group,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{quotient, subgroup_closure};

    #[test]
    fn trivial_factor_gives_other_factor() {
        let g = FiniteGroup::symmetric3();
        let p = direct_product(&FiniteGroup::trivial(), &g);
        assert!(p.group.same_table(&g));
    }

    #[test]
    fn klein_group_has_exponent_two() {
        let p = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(p.group.order(), 4);
        assert!((0..4).all(|a| p.group.op(a, a) == 0));
    }

    #[test]
    fn z2_times_z3_is_cyclic() {
        let p = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        assert!((0..6).any(|a| p.group.element_order(a) == 6));
    }

    #[test]
    fn subdirect_over_trivial_is_direct() {
        let z2 = FiniteGroup::cyclic(2);
        let t = FiniteGroup::trivial();
        let p = Homomorphism::new(&z2, &t, vec![0, 0]).unwrap();
        let s = subdirect_product(&z2, &z2, &p, &p).unwrap();
        assert_eq!(s.group.order(), 4);
    }

    #[test]
    fn diagonal_subdirect_product() {
        let z2 = FiniteGroup::cyclic(2);
        let id = Homomorphism::identity(&z2);
        let s = subdirect_product(&z2, &z2, &id, &id).unwrap();
        assert_eq!(s.pairs, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn z4_mod_two_fibre_product() {
        let z4 = FiniteGroup::cyclic(4);
        let q = quotient(&z4, &subgroup_closure(&z4, &[2])).unwrap();
        let p = q.projection(&z4).unwrap();
        let s = subdirect_product(&z4, &z4, &p, &p).unwrap();
        let brute = (0..4)
            .flat_map(|a| (0..4).map(move |b| (a, b)))
            .filter(|(a, b)| a % 2 == b % 2)
            .count();
        assert_eq!(s.group.order(), brute);
        assert_eq!(brute, 8);
    }

    #[test]
    fn mismatched_codomains_are_rejected() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        let id2 = Homomorphism::identity(&z2);
        let id4 = Homomorphism::identity(&z4);
        assert!(matches!(
            subdirect_product(&z2, &z4, &id2, &id4),
            Err(Error::CodomainMismatch)
        ));
    }
}
