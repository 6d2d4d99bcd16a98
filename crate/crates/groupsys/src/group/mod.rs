//! Finite group arithmetic.
//!
//! A [`FiniteGroup`] is an explicit operation table over element indices
//! `0..order`, with the identity always at index 0. Subgroups, quotients,
//! homomorphisms, products and extensions are built on top of the
//! [`GroupOps`] trait, so the same machinery also runs on groups whose
//! elements are whole sequences (see [`crate::system::GroupSystem`]).

mod extension;
mod grp;
mod hom;
mod iso;
mod product;
mod quotient;
mod subgroup;

pub use extension::{automorphisms, enumerate_extensions, Extension, ExtensionList};
pub(crate) use grp::{parse_grp_block, parse_grp_block_exact};
pub use grp::{parse_grp, write_grp};
pub use hom::{zassenhaus_hom, Homomorphism, ZassenhausMap};
pub use iso::{find_isomorphism, is_isomorphic};
pub use product::{direct_product, subdirect_product, DirectProduct, SubdirectProduct};
pub use quotient::{quotient, quotient_within, QuotientPresentation};
pub use subgroup::{
    generating_set, is_normal, is_normal_in, product_of_subgroups, subgroup_closure, Subgroup,
};

use crate::error::{Axiom, Error, Result};

/// Operations on a finite group whose elements are the indices `0..order`,
/// with the identity at index 0.
pub trait GroupOps {
    /// Number of elements.
    fn order(&self) -> usize;
    /// Product `a·b`.
    fn op(&self, a: usize, b: usize) -> usize;
    /// Inverse of `a`.
    fn inv(&self, a: usize) -> usize;
}

/// A finite group given by its full operation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    abelian: bool,
}

impl GroupOps for FiniteGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }
}

/// Validates a square operation table and returns the group it defines.
///
/// If the two-sided identity is not at index 0 the elements are relabeled by
/// swapping the identity with index 0. Associativity is checked exhaustively.
pub fn make_group(op_table: Vec<Vec<usize>>, name: &str) -> Result<FiniteGroup> {
    let n = op_table.len();
    if n == 0 {
        return Err(Error::AxiomViolation {
            name: name.to_string(),
            axiom: Axiom::Identity,
            witness: vec![],
        });
    }
    for (a, row) in op_table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::AxiomViolation {
                name: name.to_string(),
                axiom: Axiom::Closure,
                witness: vec![a],
            });
        }
        if let Some(b) = row.iter().position(|&c| c >= n) {
            return Err(Error::AxiomViolation {
                name: name.to_string(),
                axiom: Axiom::Closure,
                witness: vec![a, b],
            });
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| op_table[e][a] == a && op_table[a][e] == a))
        .ok_or_else(|| Error::AxiomViolation {
            name: name.to_string(),
            axiom: Axiom::Identity,
            witness: vec![],
        })?;
    let swap = |x: usize| {
        if x == identity {
            0
        } else if x == 0 {
            identity
        } else {
            x
        }
    };
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[swap(a) * n + swap(b)] = swap(op_table[a][b]);
        }
    }
    FiniteGroup::from_flat(name, n, table)
}

impl FiniteGroup {
    /// Builds a group from a flat row-major table with identity at index 0.
    pub fn from_flat(name: &str, order: usize, table: Vec<usize>) -> Result<Self> {
        let err = |axiom, witness: Vec<usize>| Error::AxiomViolation {
            name: name.to_string(),
            axiom,
            witness,
        };
        if order == 0 || table.len() != order * order {
            return Err(err(Axiom::Closure, vec![]));
        }
        if let Some(i) = table.iter().position(|&c| c >= order) {
            return Err(err(Axiom::Closure, vec![i / order, i % order]));
        }
        for a in 0..order {
            if table[a] != a || table[a * order] != a {
                return Err(err(Axiom::Identity, vec![a]));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| table[a * order + b] == 0 && table[b * order + a] == 0)
                .ok_or_else(|| err(Axiom::Inverse, vec![a]))?;
            inverses[a] = b;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    let bc = table[b * order + c];
                    if table[ab * order + c] != table[a * order + bc] {
                        return Err(err(Axiom::Associativity, vec![a, b, c]));
                    }
                }
            }
        }
        let abelian = (0..order).all(|a| (0..order).all(|b| table[a * order + b] == table[b * order + a]));
        Ok(FiniteGroup {
            name: name.to_string(),
            order,
            table,
            inverses,
            abelian,
        })
    }

    /// Builds a group from any [`GroupOps`] implementation, validating it.
    pub fn from_ops(name: &str, g: &impl GroupOps) -> Result<Self> {
        let n = g.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(g.op(a, b));
            }
        }
        Self::from_flat(name, n, table)
    }

    /// The trivial group of order 1.
    pub fn trivial() -> Self {
        FiniteGroup {
            name: "trivial".to_string(),
            order: 1,
            table: vec![0],
            inverses: vec![0],
            abelian: true,
        }
    }

    /// The cyclic group `Z_n` with element `i` standing for the residue `i`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group order must be positive");
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let inverses = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup {
            name: format!("Z{n}"),
            order: n,
            table,
            inverses,
            abelian: true,
        }
    }

    /// The symmetric group on three points.
    ///
    /// Elements are the permutations of `{0,1,2}` in lexicographic order of
    /// their image lists, and `a·b` is the composition `x ↦ a(b(x))`.
    pub fn symmetric3() -> Self {
        let perms = s3_permutations();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let mut table = Vec::with_capacity(36);
        for a in &perms {
            for b in &perms {
                table.push(index([a[b[0]], a[b[1]], a[b[2]]]));
            }
        }
        Self::from_flat("S3", 6, table).expect("S3 table is a group")
    }

    /// Looks up a built-in group by name: `trivial`, `Z<n>`, `S3`, `V4`, or a
    /// product such as `Z2xZ3` (factors joined by `x`).
    pub fn builtin(name: &str) -> Option<Self> {
        if name.contains('x') {
            let mut parts = name.split('x');
            let first = Self::builtin(parts.next()?)?;
            let group = parts.try_fold(first, |acc, part| {
                Self::builtin(part).map(|g| direct_product(&acc, &g).group)
            })?;
            return Some(group.renamed(name));
        }
        match name {
            "trivial" | "Z1" => Some(Self::trivial()),
            "S3" => Some(Self::symmetric3()),
            "V4" => Some(direct_product(&Self::cyclic(2), &Self::cyclic(2)).group.renamed("V4")),
            _ => {
                let n: usize = name.strip_prefix('Z')?.parse().ok()?;
                (n > 0).then(|| Self::cyclic(n))
            }
        }
    }

    /// Returns the same group under a different name.
    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// True when the operation is commutative.
    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    /// Operation table as rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.op(x, a);
            n += 1;
        }
        n
    }

    /// Folds a product of elements from left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.op(acc, x))
    }

    /// True when two groups have identical operation tables.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }
}

fn s3_permutations() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compose_oracle(a: &[usize; 3], b: &[usize; 3]) -> [usize; 3] {
        let mut out = [0; 3];
        for x in 0..3 {
            out[x] = a[b[x]];
        }
        out
    }

    #[test]
    fn trivial_table_is_order_one() {
        let g = make_group(vec![vec![0]], "one").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn z2_table() {
        let g = make_group(vec![vec![0, 1], vec![1, 0]], "Z2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.op(1, 1), 0);
        assert!(g.is_abelian());
    }

    #[test]
    fn s3_matches_permutation_composition() {
        let perms = s3_permutations();
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = compose_oracle(a, b);
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        let g = make_group(rows, "S3").unwrap();
        assert!(!g.is_abelian());
        assert!(g.same_table(&FiniteGroup::symmetric3()));
    }

    #[test]
    fn identity_elsewhere_is_relabeled_to_zero() {
        // Z2 with the identity written as element 1.
        let g = make_group(vec![vec![1, 0], vec![0, 1]], "Z2'").unwrap();
        assert!(g.same_table(&FiniteGroup::cyclic(2)));
    }

    #[test]
    fn broken_tables_name_the_axiom() {
        let e = make_group(vec![vec![0, 2], vec![1, 0]], "bad").unwrap_err();
        assert!(matches!(e, Error::AxiomViolation { axiom: Axiom::Closure, .. }));
        let e = make_group(vec![vec![1, 1], vec![1, 1]], "bad").unwrap_err();
        assert!(matches!(e, Error::AxiomViolation { axiom: Axiom::Identity, .. }));
        let e = make_group(vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 2]], "bad").unwrap_err();
        assert!(matches!(
            e,
            Error::AxiomViolation { axiom: Axiom::Inverse, .. } | Error::AxiomViolation { axiom: Axiom::Associativity, .. }
        ));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // A Latin square with identity and inverses that is not associative.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let e = make_group(rows, "loop").unwrap_err();
        assert!(matches!(e, Error::AxiomViolation { axiom: Axiom::Associativity, ref witness, .. } if witness.len() == 3));
    }

    #[test]
    fn builtins_resolve() {
        assert_eq!(FiniteGroup::builtin("Z4").unwrap().order(), 4);
        assert_eq!(FiniteGroup::builtin("Z2xZ2").unwrap().order(), 4);
        assert_eq!(FiniteGroup::builtin("V4").unwrap().order(), 4);
        assert_eq!(FiniteGroup::builtin("S3").unwrap().order(), 6);
        assert!(FiniteGroup::builtin("Q8").is_none());
    }

    #[test]
    fn element_orders_in_s3() {
        let g = FiniteGroup::symmetric3();
        let orders: Vec<_> = (0..6).map(|a| g.element_order(a)).collect();
        assert_eq!(orders, vec![1, 2, 2, 3, 3, 2]);
    }
}
