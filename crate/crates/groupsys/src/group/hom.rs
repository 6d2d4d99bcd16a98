//! Homomorphisms between finite groups and the Zassenhaus map.

use std::collections::HashMap;

use super::subgroup::normality_witness;
use super::{product_of_subgroups, quotient_within, FiniteGroup, GroupOps, QuotientPresentation, Subgroup};
use crate::error::{Error, Result};

/// A verified homomorphism between two explicit groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    image_of: Vec<usize>,
}

impl Homomorphism {
    /// Checks the homomorphism property on all pairs and builds the map.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, image_of: Vec<usize>) -> Result<Self> {
        if image_of.len() != domain.order() || image_of.iter().any(|&x| x >= codomain.order()) {
            return Err(Error::PreconditionViolated("image table does not fit the groups".into()));
        }
        for a in 0..domain.order() {
            for b in 0..domain.order() {
                if image_of[domain.op(a, b)] != codomain.op(image_of[a], image_of[b]) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(Homomorphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            image_of,
        })
    }

    /// The identity map of `g`.
    pub fn identity(g: &FiniteGroup) -> Self {
        Homomorphism {
            domain: g.clone(),
            codomain: g.clone(),
            image_of: (0..g.order()).collect(),
        }
    }

    /// Domain group.
    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    /// Codomain group.
    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    /// Image of every domain element.
    pub fn images(&self) -> &[usize] {
        &self.image_of
    }

    /// Image of `a`.
    pub fn apply(&self, a: usize) -> usize {
        self.image_of[a]
    }

    /// Kernel as a subgroup of the domain.
    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(
            (0..self.domain.order())
                .filter(|&a| self.image_of[a] == 0)
                .collect(),
        )
    }

    /// Image as a subgroup of the codomain.
    pub fn image(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.image_of.clone())
    }

    /// True when the map is onto.
    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }

    /// True when the map is one-to-one.
    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    /// First codomain element without a preimage, if any.
    pub fn missing_from_image(&self) -> Option<usize> {
        let image = self.image();
        (0..self.codomain.order()).find(|&x| !image.contains(x))
    }
}

/// The Zassenhaus map for `U ⊲ U*` and `V ⊲ V*`.
///
/// The map `f(u·w) = D·w` for `u ∈ U`, `w ∈ U*∩V*` sends `U(U*∩V*)` onto
/// `(U*∩V*)/D` with `D = (U*∩V)(U∩V*)`. Its kernel is `U(U*∩V)`, and the
/// induced map between the two quotients is an isomorphism.
#[derive(Debug, Clone)]
pub struct ZassenhausMap {
    /// `U(U*∩V*) / U(U*∩V)`.
    pub source: QuotientPresentation,
    /// `(U*∩V*) / (U*∩V)(U∩V*)`.
    pub target: QuotientPresentation,
    /// Map induced on the quotient groups.
    pub induced: Homomorphism,
    /// Kernel of `f` on `U(U*∩V*)`.
    pub kernel: Subgroup,
}

/// Builds and verifies the Zassenhaus map inside the group `g`.
pub fn zassenhaus_hom(
    g: &impl GroupOps,
    u: &Subgroup,
    ustar: &Subgroup,
    v: &Subgroup,
    vstar: &Subgroup,
) -> Result<ZassenhausMap> {
    if !u.is_subset(ustar) || normality_witness(g, ustar, u).is_some() {
        return Err(Error::PreconditionViolated("U is not normal in U*".into()));
    }
    if !v.is_subset(vstar) || normality_witness(g, vstar, v).is_some() {
        return Err(Error::PreconditionViolated("V is not normal in V*".into()));
    }
    let core = ustar.intersect(vstar);
    let numerator = product_of_subgroups(g, u, &core)?;
    let source_den = product_of_subgroups(g, u, &ustar.intersect(v))?;
    let target_den = product_of_subgroups(g, &ustar.intersect(v), &u.intersect(vstar))?;
    let source = quotient_within(g, &numerator, &source_den)?;
    let target = quotient_within(g, &core, &target_den)?;

    let mut f: HashMap<usize, usize> = HashMap::with_capacity(numerator.order());
    for &n in numerator.members() {
        for &w in core.members() {
            let candidate = g.op(n, g.inv(w));
            if !u.contains(candidate) {
                continue;
            }
            let image = target.project(w).expect("w lies in U*∩V*");
            match f.get(&n) {
                Some(&prev) if prev != image => {
                    return Err(Error::InvariantViolation(format!(
                        "Zassenhaus map is ambiguous at element {n}"
                    )))
                }
                _ => {
                    f.insert(n, image);
                }
            }
        }
    }
    let kernel = Subgroup::from_sorted_unchecked(
        numerator
            .members()
            .iter()
            .copied()
            .filter(|n| f[n] == 0)
            .collect(),
    );
    if kernel != source_den {
        return Err(Error::InvariantViolation(
            "kernel of the Zassenhaus map differs from U(U*∩V)".into(),
        ));
    }
    let mut induced = vec![0; source.order()];
    for (i, coset) in source.cosets().iter().enumerate() {
        induced[i] = f[&coset[0]];
    }
    let induced = Homomorphism::new(source.quotient(), target.quotient(), induced)?;
    if !induced.is_injective() {
        return Err(Error::InvariantViolation("induced Zassenhaus map is not injective".into()));
    }
    if let Some(missing) = induced.missing_from_image() {
        return Err(Error::NotSurjective { missing });
    }
    Ok(ZassenhausMap {
        source,
        target,
        induced,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, subgroup_closure};

    #[test]
    fn identity_hom_is_bijective() {
        let g = FiniteGroup::symmetric3();
        let h = Homomorphism::identity(&g);
        assert!(h.is_injective() && h.is_surjective());
    }

    #[test]
    fn sign_map_of_s3() {
        let g = FiniteGroup::symmetric3();
        let z2 = FiniteGroup::cyclic(2);
        let sign = vec![0, 1, 1, 0, 0, 1];
        let h = Homomorphism::new(&g, &z2, sign).unwrap();
        assert_eq!(h.kernel().members(), &[0, 3, 4]);
        assert!(Homomorphism::new(&g, &z2, vec![0, 1, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn zassenhaus_degenerate_case_is_trivial() {
        let g = FiniteGroup::symmetric3();
        let a3 = subgroup_closure(&g, &[3]);
        let whole = Subgroup::whole(&g);
        let z = zassenhaus_hom(&g, &a3, &a3, &whole, &whole).unwrap();
        assert!(z.source.is_trivial());
        assert!(z.target.is_trivial());
    }

    #[test]
    fn zassenhaus_in_klein_group() {
        let v4 = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).group;
        let whole = Subgroup::whole(&v4);
        let z = zassenhaus_hom(&v4, &Subgroup::trivial(), &whole, &Subgroup::trivial(), &whole).unwrap();
        assert_eq!(z.source.order(), 4);
        assert_eq!(z.target.order(), 4);
        assert!(z.induced.is_injective());
    }

    #[test]
    fn zassenhaus_mixed_subgroups_in_z2_cubed() {
        let g = FiniteGroup::builtin("Z2xZ2xZ2").unwrap();
        let u = subgroup_closure(&g, &[1]);
        let ustar = subgroup_closure(&g, &[1, 2]);
        let v = subgroup_closure(&g, &[4]);
        let vstar = subgroup_closure(&g, &[4, 2]);
        let z = zassenhaus_hom(&g, &u, &ustar, &v, &vstar).unwrap();
        assert_eq!(z.source.order(), z.target.order());
    }
}
