//! Elementary systems: the elementary groups of a generator group with the
//! global operation forgotten, and the group systems they assemble into.
//!
//! An elementary system fixes a label set at every index pair and, at every
//! pair `(k, t)`, a group whose elements are realized label triangles over
//! the upper triangle at `(k, t)`. The homomorphism condition asks that
//! restricting a triangle to either of its two maximal subtriangles is a
//! homomorphism. Gluing the slices at `(0, t)` for all `t` gives the global
//! group, and reading each slice as a letter gives a group system.

mod construct;
mod esys;
mod iso;

pub use construct::{construct_elementary_system, ConstructionStrategy, KernelChoice};
pub use esys::{parse_esys, write_esys};
pub use iso::{structurally_equal, LabelBijections};

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::generator::{elementary_group, recover_system_fhgs, ElementaryGroupTable, GeneratorContext, TensorU};
use crate::group::{FiniteGroup, GroupOps};
use crate::index::{IndexLayout, IndexPair};
use crate::system::{extract_basis, GroupSystem};
use crate::Bounds;

/// Label sets and elementary groups over an index layout.
#[derive(Debug, Clone)]
pub struct ElementarySystem {
    name: String,
    layout: IndexLayout,
    label_sizes: Vec<usize>,
    tables: Vec<Arc<ElementaryGroupTable>>,
}

impl ElementarySystem {
    /// Assembles a system from one table per layout pair, in layout order.
    ///
    /// Checks shapes only: every table sits at its pair, lists the clipped
    /// upper triangle in canonical order and uses labels within the label
    /// sets. Use [`check_homomorphism_condition`] and [`validate`] for the
    /// algebraic invariants.
    pub fn new(
        name: &str,
        layout: IndexLayout,
        label_sizes: Vec<usize>,
        tables: Vec<Arc<ElementaryGroupTable>>,
    ) -> Result<Self> {
        if label_sizes.len() != layout.len() || tables.len() != layout.len() {
            return Err(Error::PreconditionViolated("one label set and one table per index pair".into()));
        }
        if label_sizes.contains(&0) {
            return Err(Error::PreconditionViolated("label sets must be nonempty".into()));
        }
        for (&pair, table) in layout.pairs().iter().zip(&tables) {
            if table.anchor != pair || table.positions != layout.upper_triangle(pair) {
                return Err(Error::ShapeMismatch {
                    source_anchor: table.anchor,
                    target: pair,
                });
            }
            let sizes: Vec<usize> = table.positions.iter().map(|&p| label_sizes[layout.position(p).expect("clipped")]).collect();
            if table.elements.iter().any(|e| e.iter().zip(&sizes).any(|(&l, &n)| l >= n)) {
                return Err(Error::InvariantViolation(format!("a triangle at {pair} uses an undefined label")));
            }
        }
        Ok(ElementarySystem {
            name: name.to_string(),
            layout,
            label_sizes,
            tables,
        })
    }

    /// System name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The index layout.
    pub fn layout(&self) -> &IndexLayout {
        &self.layout
    }

    /// Depth minus one.
    pub fn ell(&self) -> usize {
        self.layout.ell()
    }

    /// Depth `ℓ + 1`.
    pub fn depth(&self) -> usize {
        self.layout.ell() + 1
    }

    /// Window `[t0, t1]`.
    pub fn window(&self) -> (i64, i64) {
        self.layout.window()
    }

    /// Size of the label set at each layout position.
    pub fn label_sizes(&self) -> &[usize] {
        &self.label_sizes
    }

    /// The elementary group at each layout position.
    pub fn tables(&self) -> &[Arc<ElementaryGroupTable>] {
        &self.tables
    }

    /// The elementary group at `pair`.
    pub fn table(&self, pair: IndexPair) -> Result<&Arc<ElementaryGroupTable>> {
        Ok(&self.tables[self.layout.require(pair)?])
    }

    /// The elementary groups at `(0, t)` for every time, in time order.
    pub fn slice_tables(&self) -> Vec<&Arc<ElementaryGroupTable>> {
        let (t0, t1) = self.window();
        (t0..=t1).map(|t| self.table(IndexPair::new(0, t)).expect("bottom row")).collect()
    }
}

/// The elementary system of a generator group: its label sets and every
/// elementary group, with the homomorphism condition re-verified.
pub fn extract_elementary_system(ctx: &GeneratorContext) -> Result<ElementarySystem> {
    let layout = ctx.layout().clone();
    let tables = layout
        .pairs()
        .iter()
        .map(|p| elementary_group(ctx, p.k, p.t))
        .collect::<Result<Vec<_>>>()?;
    let es = ElementarySystem::new(ctx.system().name(), layout, ctx.label_sizes().to_vec(), tables)?;
    if let Some(v) = check_homomorphism_condition(&es).violation {
        return Err(Error::HomomorphismCondition(v.to_string()));
    }
    Ok(es)
}

/// A failure of the homomorphism condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionViolation {
    /// The triangle being restricted.
    pub source: IndexPair,
    /// The subtriangle it is restricted to.
    pub target: IndexPair,
    /// Witness pair of source elements, absent when a restriction is not an
    /// element of the target group at all.
    pub witness: Option<(usize, usize)>,
}

impl std::fmt::Display for ProjectionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.witness {
            Some((a, b)) => write!(
                f,
                "restriction {} -> {} breaks the product of elements {a} and {b}",
                self.source, self.target
            ),
            None => write!(f, "restriction {} -> {} leaves the target group", self.source, self.target),
        }
    }
}

/// Outcome of [`check_homomorphism_condition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismCheck {
    /// True when every restriction is a homomorphism.
    pub holds: bool,
    /// The first failing restriction, in layout order.
    pub violation: Option<ProjectionViolation>,
}

/// Checks that restricting the triangle at `(k, t)` to the triangles at
/// `(k+1, t)` and `(k+1, t-1)` is a homomorphism, for every `k < ℓ` and every
/// `t` where the subtriangle lies in the layout.
pub fn check_homomorphism_condition(es: &ElementarySystem) -> HomomorphismCheck {
    let layout = es.layout();
    for (&pair, source) in layout.pairs().iter().zip(es.tables()) {
        if pair.k >= layout.ell() {
            continue;
        }
        for target_pair in [IndexPair::new(pair.k + 1, pair.t), IndexPair::new(pair.k + 1, pair.t - 1)] {
            let Some(pos) = layout.position(target_pair) else { continue };
            let target = &es.tables()[pos];
            let fail = |witness| HomomorphismCheck {
                holds: false,
                violation: Some(ProjectionViolation {
                    source: pair,
                    target: target_pair,
                    witness,
                }),
            };
            let Ok(map) = source.restriction_map(target) else {
                return fail(None);
            };
            let n = source.order();
            for a in 0..n {
                for b in 0..n {
                    if map[source.multiply(a, b)] != target.multiply(map[a], map[b]) {
                        return fail(Some((a, b)));
                    }
                }
            }
        }
    }
    HomomorphismCheck {
        holds: true,
        violation: None,
    }
}

struct SliceIndex {
    positions: Vec<usize>,
    shared: Vec<usize>,
    by_shared: HashMap<Vec<usize>, Vec<usize>>,
}

fn slice_indices(es: &ElementarySystem) -> Vec<SliceIndex> {
    let layout = es.layout();
    es.slice_tables()
        .into_iter()
        .map(|table| {
            let positions: Vec<usize> = table.positions.iter().map(|&p| layout.position(p).expect("clipped")).collect();
            let shared: Vec<usize> = (0..positions.len()).filter(|&i| table.positions[i].t < table.anchor.t).collect();
            let mut by_shared: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for (e, labels) in table.elements.iter().enumerate() {
                by_shared.entry(shared.iter().map(|&i| labels[i]).collect()).or_default().push(e);
            }
            SliceIndex {
                positions,
                shared,
                by_shared,
            }
        })
        .collect()
}

/// Every label tensor whose slice at each `(0, t)` is an element of the
/// elementary group there, sorted.
///
/// Fails with [`Error::BoundExceeded`] past `member_cap` tensors.
pub fn realized_tensors(es: &ElementarySystem, bounds: &Bounds) -> Result<Vec<Vec<usize>>> {
    let slices = slice_indices(es);
    let tables = es.slice_tables();
    let mut out = Vec::new();
    let mut labels = vec![usize::MAX; es.layout().len()];
    extend_tensor(&slices, &tables, 0, &mut labels, &mut out, bounds.member_cap)?;
    out.sort();
    Ok(out)
}

fn extend_tensor(
    slices: &[SliceIndex],
    tables: &[&Arc<ElementaryGroupTable>],
    i: usize,
    labels: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if i == slices.len() {
        if out.len() == cap {
            return Err(Error::BoundExceeded {
                what: "realized tensors".into(),
                limit: cap,
            });
        }
        out.push(labels.clone());
        return Ok(());
    }
    let s = &slices[i];
    let key: Vec<usize> = s.shared.iter().map(|&j| labels[s.positions[j]]).collect();
    let Some(candidates) = s.by_shared.get(&key) else { return Ok(()) };
    for &e in candidates {
        let tri = &tables[i].elements[e];
        for (j, &pos) in s.positions.iter().enumerate() {
            labels[pos] = tri[j];
        }
        extend_tensor(slices, tables, i + 1, labels, out, cap)?;
    }
    for (j, &pos) in s.positions.iter().enumerate() {
        if !s.shared.contains(&j) {
            labels[pos] = usize::MAX;
        }
    }
    Ok(())
}

/// The letter sequence of a label tensor: the index of its slice at `(0, t)`
/// in the elementary group there, for every time.
pub fn slice_sequence(es: &ElementarySystem, v: &[usize]) -> Result<Vec<usize>> {
    slice_elements(es, v)
}

fn slice_elements(es: &ElementarySystem, v: &[usize]) -> Result<Vec<usize>> {
    let layout = es.layout();
    es.slice_tables()
        .into_iter()
        .map(|table| {
            let tri: Vec<usize> = table.positions.iter().map(|&p| v[layout.position(p).expect("clipped")]).collect();
            table.element_index(&tri).ok_or(Error::UnrealizedSlice(table.anchor.t))
        })
        .collect()
}

/// The product of two label tensors: every slice at `(0, t)` is the
/// elementary product of the operands' slices.
///
/// Slices overlap, and the products must agree on every shared pair.
pub fn global_product(es: &ElementarySystem, v1: &[usize], v2: &[usize]) -> Result<Vec<usize>> {
    let layout = es.layout();
    if v1.len() != layout.len() || v2.len() != layout.len() {
        return Err(Error::PreconditionViolated("tensor length differs from the index layout".into()));
    }
    let (a, b) = (slice_elements(es, v1)?, slice_elements(es, v2)?);
    let mut out = vec![usize::MAX; layout.len()];
    for (i, table) in es.slice_tables().into_iter().enumerate() {
        let tri = &table.elements[table.multiply(a[i], b[i])];
        for (&p, &l) in table.positions.iter().zip(tri) {
            let cell = &mut out[layout.position(p).expect("clipped")];
            if *cell != usize::MAX && *cell != l {
                return Err(Error::OverlapInconsistency(p));
            }
            *cell = l;
        }
    }
    Ok(out)
}

/// The global group: realized label tensors under [`global_product`].
#[derive(Debug, Clone)]
pub struct GlobalGroup {
    es: ElementarySystem,
    tensors: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl GlobalGroup {
    /// Enumerates the realized tensors of `es`.
    pub fn new(es: &ElementarySystem, bounds: &Bounds) -> Result<Self> {
        let tensors = realized_tensors(es, bounds)?;
        let index = tensors.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Ok(GlobalGroup {
            es: es.clone(),
            tensors,
            index,
        })
    }

    /// The underlying elementary system.
    pub fn system(&self) -> &ElementarySystem {
        &self.es
    }

    /// Realized tensors in sorted order; tensor 0 is the identity.
    pub fn tensors(&self) -> &[Vec<usize>] {
        &self.tensors
    }

    /// Index of a realized tensor.
    pub fn index_of(&self, v: &[usize]) -> Option<usize> {
        self.index.get(v).copied()
    }
}

impl GroupOps for GlobalGroup {
    fn order(&self) -> usize {
        self.tensors.len()
    }

    fn op(&self, a: usize, b: usize) -> usize {
        let c = global_product(&self.es, &self.tensors[a], &self.tensors[b]).expect("validated elementary system");
        self.index[&c]
    }

    fn inv(&self, a: usize) -> usize {
        let layout = self.es.layout();
        let mut out = vec![0; layout.len()];
        let slices = slice_elements(&self.es, &self.tensors[a]).expect("realized tensor");
        for (table, e) in self.es.slice_tables().into_iter().zip(slices) {
            let tri = &table.elements[table.group.inv(e)];
            for (&p, &l) in table.positions.iter().zip(tri) {
                out[layout.position(p).expect("clipped")] = l;
            }
        }
        self.index[&out]
    }
}

/// Checks every invariant of an elementary system: the homomorphism
/// condition, that every listed triangle occurs in some realized tensor and
/// that realized tensors are closed under the global product.
pub fn validate(es: &ElementarySystem, bounds: &Bounds) -> Result<GlobalGroup> {
    if let Some(v) = check_homomorphism_condition(es).violation {
        return Err(Error::HomomorphismCondition(v.to_string()));
    }
    let global = GlobalGroup::new(es, bounds)?;
    let layout = es.layout();
    for table in es.tables() {
        let idx: Vec<usize> = table.positions.iter().map(|&p| layout.position(p).expect("clipped")).collect();
        let mut seen = vec![false; table.order()];
        for v in global.tensors() {
            let tri: Vec<usize> = idx.iter().map(|&i| v[i]).collect();
            seen[table.element_index(&tri).ok_or(Error::UnrealizedTriangle { anchor: table.anchor })?] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::UnrealizedTriangle { anchor: table.anchor });
        }
    }
    let n = global.order();
    for a in 0..n {
        for b in 0..n {
            let c = global_product(es, &global.tensors[a], &global.tensors[b])?;
            if global.index_of(&c).is_none() {
                return Err(Error::InvariantViolation("realized tensors are not closed under the product".into()));
            }
        }
    }
    Ok(global)
}

/// The group system of an elementary system.
///
/// The letter at time `t` is the slice at `(0, t)`, so the alphabet at `t`
/// is the elementary group there. The result is verified to have
/// controllability index at most `ℓ` and a complete generator basis.
pub fn global_group_system(es: &ElementarySystem, bounds: &Bounds) -> Result<GroupSystem> {
    let global = validate(es, bounds)?;
    let alphabets: Vec<FiniteGroup> = es.slice_tables().into_iter().map(|t| t.group.clone()).collect();
    let members = global
        .tensors()
        .iter()
        .map(|v| slice_elements(es, v))
        .collect::<Result<Vec<_>>>()?;
    let sys = GroupSystem::from_members(es.name(), es.window(), alphabets, members)?;
    if sys.order() != global.order() {
        return Err(Error::InvariantViolation("two realized tensors share their slices".into()));
    }
    let ell = sys.ell()?;
    if ell > es.ell() {
        return Err(Error::InvariantViolation(format!(
            "global group system has controllability index {ell}, above {}",
            es.ell()
        )));
    }
    extract_basis(&sys)?;
    Ok(sys)
}

/// Rebuilds the generator group of `ctx` from its elementary system and
/// recovers the original group system from it.
///
/// The realized tensors must be exactly the label tensors of `ctx`, and the
/// global product must agree with `∘`: over all pairs for small groups,
/// otherwise against every generator tensor, which generate `(𝒰,∘)`.
pub fn recover_original(es: &ElementarySystem, ctx: &GeneratorContext, bounds: &Bounds) -> Result<GroupSystem> {
    let mismatch = |m: &str| Error::RecoveryMismatch(m.to_string());
    let global = GlobalGroup::new(es, bounds)?;
    if global.order() != ctx.order() {
        return Err(mismatch("realized tensors differ in number from the label tensors"));
    }
    let member_of: Vec<usize> = global
        .tensors()
        .iter()
        .map(|v| ctx.member_of(&TensorU { labels: v.clone() }).ok_or_else(|| mismatch("a realized tensor is not a label tensor")))
        .collect::<Result<_>>()?;
    let n = global.order();
    let right: Vec<usize> = if n.saturating_mul(n) <= 1 << 20 {
        (0..n).collect()
    } else {
        (0..n).filter(|&i| global.tensors()[i].iter().filter(|&&l| l != 0).count() == 1).collect()
    };
    for a in 0..n {
        for &b in &right {
            let u = &ctx.tensors()[ctx.op(member_of[a], member_of[b])];
            let v = global_product(es, &global.tensors()[a], &global.tensors()[b])?;
            if u.labels != v {
                return Err(mismatch("the global product differs from the generator group product"));
            }
        }
    }
    recover_system_fhgs(ctx)
}

/// The elementary system made of the top `m` rows, `1 ≤ m ≤ ℓ + 1`.
///
/// Row `k` becomes row `k - (ℓ + 1 - m)`, which shortens every span by the
/// same amount; the window's end moves left by that amount so that the pairs
/// keep their positions relative to it.
pub fn depth_restrict(es: &ElementarySystem, m: usize) -> Result<ElementarySystem> {
    if m == 0 || m > es.depth() {
        return Err(Error::PreconditionViolated(format!("depth {m} outside 1..={}", es.depth())));
    }
    let d = es.depth() - m;
    let (t0, t1) = es.window();
    let layout = IndexLayout::new(m - 1, t0, t1 - d as i64);
    let shift = |p: IndexPair| IndexPair::new(p.k - d, p.t);
    let unshift = |p: IndexPair| IndexPair::new(p.k + d, p.t);
    let label_sizes = layout
        .pairs()
        .iter()
        .map(|&p| es.label_sizes()[es.layout().position(unshift(p)).expect("restricted pair")])
        .collect();
    let tables = layout
        .pairs()
        .iter()
        .map(|&p| {
            let old = es.table(unshift(p))?;
            let group = old.group.clone().renamed(&crate::generator::group_name(p));
            ElementaryGroupTable::new(p, old.positions.iter().map(|&q| shift(q)).collect(), old.elements.clone(), group)
                .map(Arc::new)
        })
        .collect::<Result<Vec<_>>>()?;
    ElementarySystem::new(es.name(), layout, label_sizes, tables)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::generator::circ;
    use crate::generator::fixtures::*;

    pub(crate) fn extracted(sys: &GroupSystem) -> (GeneratorContext, ElementarySystem) {
        let ctx = GeneratorContext::from_system(sys).unwrap();
        let es = extract_elementary_system(&ctx).unwrap();
        (ctx, es)
    }

    #[test]
    fn extraction_shapes() {
        let (_, es) = extracted(&trivial());
        assert!(es.tables().iter().all(|t| t.order() == 1));
        let (_, es) = extracted(&r2());
        assert_eq!(es.depth(), 2);
        let nontrivial: Vec<usize> = es.tables().iter().filter(|t| t.anchor.k == 1).map(|t| t.order()).collect();
        assert_eq!(nontrivial, vec![2]);
        let (_, es) = extracted(&c2());
        assert_eq!(es.depth(), 2);
        for t in 1..=2 {
            assert_eq!(es.table(IndexPair::new(0, t)).unwrap().order(), 4);
        }
    }

    #[test]
    fn extracted_systems_satisfy_the_homomorphism_condition() {
        for sys in [trivial(), r2(), c2(), s3_letters()] {
            let (_, es) = extracted(&sys);
            assert!(check_homomorphism_condition(&es).holds);
        }
    }

    #[test]
    fn replaced_table_breaks_the_condition() {
        let (_, es) = extracted(&c2());
        let pos = es.layout().position(IndexPair::new(0, 1)).unwrap();
        let old = &es.tables()[pos];
        let group = FiniteGroup::cyclic(old.order()).renamed("E_0_1");
        assert!(!group.same_table(&old.group));
        let mut tables = es.tables().to_vec();
        tables[pos] = Arc::new(ElementaryGroupTable::new(old.anchor, old.positions.clone(), old.elements.clone(), group).unwrap());
        let bad = ElementarySystem::new("bad", es.layout().clone(), es.label_sizes().to_vec(), tables).unwrap();
        let check = check_homomorphism_condition(&bad);
        assert!(!check.holds);
        let v = check.violation.unwrap();
        assert_eq!(v.source, IndexPair::new(0, 1));
        assert!(v.witness.is_some());
        assert!(matches!(validate(&bad, &Bounds::default()), Err(Error::HomomorphismCondition(_))));
    }

    #[test]
    fn global_product_is_the_generator_group_product() {
        for sys in [r2(), c2(), s3_letters()] {
            let (ctx, es) = extracted(&sys);
            let global = GlobalGroup::new(&es, &Bounds::default()).unwrap();
            assert_eq!(global.order(), ctx.order());
            for u in ctx.tensors() {
                for w in ctx.tensors() {
                    assert_eq!(global_product(&es, &u.labels, &w.labels).unwrap(), circ(&ctx, u, w).unwrap().labels);
                }
            }
        }
    }

    #[test]
    fn assembly_is_deterministic() {
        let (_, es) = extracted(&c2());
        let a = GlobalGroup::new(&es, &Bounds::default()).unwrap();
        let b = GlobalGroup::new(&es.clone(), &Bounds::default()).unwrap();
        assert_eq!(a.tensors(), b.tensors());
        for x in 0..a.order() {
            for y in 0..a.order() {
                assert_eq!(a.op(x, y), b.op(x, y));
            }
        }
    }

    #[test]
    fn unrealized_operands_are_rejected() {
        let (_, es) = extracted(&r2());
        let bad = vec![1; es.layout().len()];
        let zero = vec![0; es.layout().len()];
        assert!(matches!(global_product(&es, &bad, &zero), Err(Error::UnrealizedSlice(_))));
    }

    #[test]
    fn original_systems_are_recovered() {
        for sys in [trivial(), r2(), c2(), s3_letters()] {
            let (ctx, es) = extracted(&sys);
            let back = recover_original(&es, &ctx, &Bounds::default()).unwrap();
            assert!(back.same_members(&sys));
            let global = global_group_system(&es, &Bounds::default()).unwrap();
            assert_eq!(global.order(), sys.order());
            assert_eq!(global.ell().unwrap(), sys.ell().unwrap());
        }
    }

    #[test]
    fn global_systems_are_isomorphic_with_enlarged_letters() {
        use crate::group::{find_isomorphism, Subgroup};
        for sys in [r2(), c2(), s3_letters()] {
            let (_, es) = extracted(&sys);
            let global = global_group_system(&es, &Bounds::default()).unwrap();
            for t in sys.times() {
                assert!(global.alphabet(t).order() >= sys.alphabet(t).order());
            }
            let a = Subgroup::whole(&sys).to_group(&sys, "A").unwrap();
            let b = Subgroup::whole(&global).to_group(&global, "B").unwrap();
            assert!(find_isomorphism(&a, &b).is_some(), "{}", sys.name());
        }
    }

    #[test]
    fn depth_restrictions() {
        let (_, es) = extracted(&c2());
        let same = depth_restrict(&es, es.depth()).unwrap();
        assert_eq!(same.layout(), es.layout());
        let top = depth_restrict(&es, 1).unwrap();
        assert_eq!(top.ell(), 0);
        assert_eq!(top.window(), (0, 2));
        assert!(check_homomorphism_condition(&top).holds);
        validate(&top, &Bounds::default()).unwrap();
        let two = depth_restrict(&es, 2).unwrap();
        validate(&two, &Bounds::default()).unwrap();
        assert!(depth_restrict(&es, 0).is_err());
        assert!(depth_restrict(&es, 3).is_err());
    }

    #[test]
    fn depth_one_products_are_componentwise() {
        let (_, es) = extracted(&c2());
        let top = depth_restrict(&es, 1).unwrap();
        let global = GlobalGroup::new(&top, &Bounds::default()).unwrap();
        for a in global.tensors() {
            for b in global.tensors() {
                let c = global_product(&top, a, b).unwrap();
                for (i, table) in top.tables().iter().enumerate() {
                    assert_eq!(c[i], table.multiply(a[i], b[i]));
                }
            }
        }
    }
}
