//! Upper elementary groups, component groups and the maps between them.

use std::collections::HashMap;
use std::sync::Arc;

use super::{star, GeneratorContext, TensorU};
use crate::error::{Error, Result};
use crate::group::{is_normal, product_of_subgroups, FiniteGroup, GroupOps, Homomorphism, Subgroup};
use crate::index::IndexPair;
use crate::system::TensorR;

/// Group orders up to this bound are checked over every lift pair; larger
/// groups use the kernel-coset certificate instead.
const EXHAUSTIVE_LIFT_LIMIT: usize = 1 << 20;

/// The labels of a tensor on the upper triangle of an anchor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    /// Lower vertex of the triangle.
    pub anchor: IndexPair,
    /// Pairs of the triangle in canonical order.
    pub positions: Vec<IndexPair>,
    /// Label at each pair.
    pub labels: Vec<usize>,
}

/// The upper triangle of `u` at `(k, t)`.
pub fn triangle(ctx: &GeneratorContext, u: &TensorU, k: usize, t: i64) -> Result<Triangle> {
    let anchor = IndexPair::new(k, t);
    let layout = ctx.layout();
    layout.require(anchor)?;
    let positions = layout.upper_triangle(anchor);
    let labels = positions
        .iter()
        .map(|&p| u.labels[layout.position(p).expect("clipped triangle")])
        .collect();
    Ok(Triangle {
        anchor,
        positions,
        labels,
    })
}

/// An elementary group: the distinct label triangles at an anchor with the
/// group operation they inherit.
#[derive(Debug, Clone)]
pub struct ElementaryGroupTable {
    /// Lower vertex of the triangles.
    pub anchor: IndexPair,
    /// Pairs of the triangle in canonical order.
    pub positions: Vec<IndexPair>,
    /// Realized triangles, sorted; element 0 is the all-identity triangle.
    pub elements: Vec<Vec<usize>>,
    /// Operation on element indices.
    pub group: FiniteGroup,
    index: HashMap<Vec<usize>, usize>,
}

impl ElementaryGroupTable {
    /// Assembles a table, checking that the element list and the group fit.
    pub fn new(anchor: IndexPair, positions: Vec<IndexPair>, elements: Vec<Vec<usize>>, group: FiniteGroup) -> Result<Self> {
        let bad = |what: &str| Err(Error::InvariantViolation(format!("elementary group at {anchor}: {what}")));
        if elements.len() != group.order() {
            return bad("element count differs from the group order");
        }
        if elements.iter().any(|e| e.len() != positions.len()) {
            return bad("a triangle has the wrong number of entries");
        }
        if elements[0].iter().any(|&l| l != 0) {
            return bad("element 0 is not the identity triangle");
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return bad("elements are not strictly sorted");
        }
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Ok(ElementaryGroupTable {
            anchor,
            positions,
            elements,
            group,
            index,
        })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index of a triangle, if realized.
    pub fn element_index(&self, labels: &[usize]) -> Option<usize> {
        self.index.get(labels).copied()
    }

    /// Product of two triangles given by index.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.group.op(a, b)
    }

    /// For every element, the index of its restriction to `target`.
    ///
    /// Fails with [`Error::ShapeMismatch`] when the target triangle is not a
    /// subtriangle and with [`Error::UnrealizedTriangle`] when a restriction
    /// is not an element of the target.
    pub fn restriction_map(&self, target: &ElementaryGroupTable) -> Result<Vec<usize>> {
        let picks: Vec<usize> = target
            .positions
            .iter()
            .map(|p| self.positions.iter().position(|q| q == p))
            .collect::<Option<_>>()
            .ok_or(Error::ShapeMismatch {
                source_anchor: self.anchor,
                target: target.anchor,
            })?;
        self.elements
            .iter()
            .map(|e| {
                let r: Vec<usize> = picks.iter().map(|&i| e[i]).collect();
                target
                    .element_index(&r)
                    .ok_or(Error::UnrealizedTriangle { anchor: target.anchor })
            })
            .collect()
    }
}

fn slice_indices(ctx: &GeneratorContext, anchor: IndexPair) -> Result<(Vec<IndexPair>, Vec<usize>)> {
    let layout = ctx.layout();
    layout.require(anchor)?;
    let positions = layout.upper_triangle(anchor);
    let idx = positions.iter().map(|&p| layout.position(p).expect("clipped triangle")).collect();
    Ok((positions, idx))
}

fn slice(u: &TensorU, idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|&p| u.labels[p]).collect()
}

/// The upper elementary group at `(k, t)`.
///
/// The product of two triangles is computed by lifting both to label tensors,
/// multiplying in `(𝒰,∘)` and slicing. The result is checked to be independent
/// of the lifts: over every lift pair for small groups, and otherwise by
/// showing that the triangles are exactly the cosets of a normal subgroup.
pub fn elementary_group(ctx: &GeneratorContext, k: usize, t: i64) -> Result<Arc<ElementaryGroupTable>> {
    let anchor = IndexPair::new(k, t);
    if let Some(table) = ctx.cached_elementary(anchor) {
        return Ok(table);
    }
    let (positions, idx) = slice_indices(ctx, anchor)?;
    let slices: Vec<Vec<usize>> = ctx.tensors().iter().map(|u| slice(u, &idx)).collect();
    let mut elements = slices.clone();
    elements.sort();
    elements.dedup();
    let index: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let class: Vec<usize> = slices.iter().map(|s| index[s.as_slice()]).collect();
    let mut fibers = vec![Vec::new(); elements.len()];
    for (member, &c) in class.iter().enumerate() {
        fibers[c].push(member);
    }
    let n = elements.len();
    let failure = || Error::WellDefinednessFailure { anchor };
    let order = ctx.order();
    if order.saturating_mul(order) <= EXHAUSTIVE_LIFT_LIMIT {
        let mut table = vec![usize::MAX; n * n];
        for a in 0..order {
            for b in 0..order {
                let c = class[ctx.op(a, b)];
                let cell = &mut table[class[a] * n + class[b]];
                if *cell == usize::MAX {
                    *cell = c;
                } else if *cell != c {
                    return Err(failure());
                }
            }
        }
        let group = FiniteGroup::from_flat(&group_name(anchor), n, table).map_err(|_| failure())?;
        return Ok(ctx.store_elementary(ElementaryGroupTable::new(anchor, positions, elements, group)?));
    }
    let kernel = Subgroup::new(ctx, fibers[0].clone()).map_err(|_| failure())?;
    if !is_normal(ctx, &kernel)? {
        return Err(failure());
    }
    for fiber in &fibers {
        let mut coset: Vec<usize> = kernel.members().iter().map(|&x| ctx.op(fiber[0], x)).collect();
        coset.sort();
        if &coset != fiber {
            return Err(failure());
        }
    }
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(class[ctx.op(fibers[a][0], fibers[b][0])]);
        }
    }
    let group = FiniteGroup::from_flat(&group_name(anchor), n, table).map_err(|_| failure())?;
    Ok(ctx.store_elementary(ElementaryGroupTable::new(anchor, positions, elements, group)?))
}

pub(crate) fn group_name(anchor: IndexPair) -> String {
    format!("E_{}_{}", anchor.k, anchor.t)
}

/// The projection of `(𝒰,∘)` onto the elementary group at `(0, t)`.
///
/// Verified to be a surjective homomorphism whose kernel is the product of
/// the tensors supported on pairs starting after `t` and those supported on
/// pairs ending before `t`.
pub fn theta_t(ctx: &GeneratorContext, t: i64) -> Result<Homomorphism> {
    let table = elementary_group(ctx, 0, t)?;
    let (_, idx) = slice_indices(ctx, IndexPair::new(0, t))?;
    let images = ctx
        .tensors()
        .iter()
        .map(|u| table.element_index(&slice(u, &idx)).expect("realized slice"))
        .collect();
    let hom = Homomorphism::new(ctx.generator_group(), &table.group, images)?;
    if !hom.is_surjective() {
        return Err(Error::InvariantViolation(format!("theta at time {t} is not surjective")));
    }
    let layout = ctx.layout();
    let after: Vec<usize> = (0..layout.len()).filter(|&p| layout.pairs()[p].t > t).collect();
    let before: Vec<usize> = (0..layout.len()).filter(|&p| layout.pairs()[p].end() < t).collect();
    let expected = product_of_subgroups(ctx, &ctx.supported_on(&after), &ctx.supported_on(&before))?;
    if hom.kernel() != expected {
        return Err(Error::InvariantViolation(format!("theta at time {t} has an unexpected kernel")));
    }
    Ok(hom)
}

/// A projection between nested elementary groups.
#[derive(Debug, Clone)]
pub struct NestedHom {
    /// Source group.
    pub source: Arc<ElementaryGroupTable>,
    /// Target group, a subtriangle of the source.
    pub target: Arc<ElementaryGroupTable>,
    /// The verified projection homomorphism.
    pub hom: Homomorphism,
}

/// The projection from the elementary group at `source` onto the one at
/// `target`, verified to be a homomorphism.
///
/// The upper triangle of `target = (k', t')` lies inside that of
/// `source = (k, t)` exactly when `k' >= k`, `t' <= t` and
/// `t' + k' >= t + k`; any other target is a [`Error::ShapeMismatch`].
pub fn nested_hom(ctx: &GeneratorContext, source: IndexPair, target: IndexPair) -> Result<NestedHom> {
    let src = elementary_group(ctx, source.k, source.t)?;
    let tgt = elementary_group(ctx, target.k, target.t)?;
    if !(target.k >= source.k && target.t <= source.t && target.end() >= source.end()) {
        return Err(Error::ShapeMismatch {
            source_anchor: source,
            target,
        });
    }
    let images = src.restriction_map(&tgt)?;
    let hom = Homomorphism::new(&src.group, &tgt.group, images)?;
    Ok(NestedHom {
        source: src,
        target: tgt,
        hom,
    })
}

/// The component group at time `t`: triangles of generators rather than
/// labels, multiplied through the decomposition group.
#[derive(Debug, Clone)]
pub struct ComponentGroup {
    /// Time of the triangle's lower vertex.
    pub t: i64,
    /// Pairs of the triangle in canonical order.
    pub positions: Vec<IndexPair>,
    /// Generator triangles as member indices, in the order of the elementary
    /// group's elements.
    pub elements: Vec<Vec<usize>>,
    /// Operation on element indices.
    pub group: FiniteGroup,
}

/// Builds the component group at `t` and checks that relabeling generators
/// to labels turns it into the elementary group at `(0, t)`.
pub fn component_group_r(ctx: &GeneratorContext, t: i64) -> Result<ComponentGroup> {
    let anchor = IndexPair::new(0, t);
    let upper = elementary_group(ctx, 0, t)?;
    let (positions, idx) = slice_indices(ctx, anchor)?;
    let generators = |labels: &[usize]| -> Vec<usize> {
        idx.iter()
            .zip(labels)
            .map(|(&p, &l)| ctx.basis().transversal(p)[l])
            .collect()
    };
    let elements: Vec<Vec<usize>> = upper.elements.iter().map(|e| generators(e)).collect();
    let lookup: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let mut lift = vec![None; elements.len()];
    for u in ctx.tensors() {
        let e = upper.element_index(&slice(u, &idx)).expect("realized slice");
        lift[e].get_or_insert_with(|| TensorR { choice: u.labels.clone() });
    }
    let lift: Vec<TensorR> = lift.into_iter().map(|l| l.expect("every element is realized")).collect();
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &lift {
        for b in &lift {
            let r = star(ctx, a, b)?;
            let tri = generators(&slice(&super::beta(&r), &idx));
            table.push(*lookup.get(tri.as_slice()).ok_or(Error::UnrealizedTriangle { anchor })?);
        }
    }
    let group = FiniteGroup::from_flat(&format!("C_{t}"), n, table)?;
    if !group.same_table(&upper.group) {
        return Err(Error::InvariantViolation(format!(
            "component group at time {t} does not match the elementary group"
        )));
    }
    Ok(ComponentGroup {
        t,
        positions,
        elements,
        group,
    })
}

/// Folds a generator triangle at `(0, t)` into the letter it produces at `t`.
///
/// `generators` lists member indices of the generators in canonical triangle
/// order. The letters at time `t` are multiplied in time-domain encoder order.
pub fn alpha_t(ctx: &GeneratorContext, t: i64, generators: &[usize]) -> Result<usize> {
    let anchor = IndexPair::new(0, t);
    let (_, idx) = slice_indices(ctx, anchor)?;
    let realized = ctx.tensors().iter().any(|u| {
        idx.iter()
            .zip(generators)
            .all(|(&p, &g)| ctx.basis().transversal(p)[u.labels[p]] == g)
    });
    if generators.len() != idx.len() || !realized {
        return Err(Error::UnrealizedTriangle { anchor });
    }
    let sys = ctx.system();
    let at: HashMap<usize, usize> = idx.iter().zip(generators).map(|(&p, &g)| (p, g)).collect();
    let letters = ctx
        .layout()
        .time_domain_slots(t)
        .into_iter()
        .map(|p| sys.letter(at[&p], t));
    Ok(sys.alphabet(t).product(letters))
}

/// `α^t` as a homomorphism from the component group onto the alphabet,
/// verified to be surjective.
pub fn alpha_hom(ctx: &GeneratorContext, comp: &ComponentGroup) -> Result<Homomorphism> {
    let images = comp
        .elements
        .iter()
        .map(|g| alpha_t(ctx, comp.t, g))
        .collect::<Result<Vec<_>>>()?;
    let hom = Homomorphism::new(&comp.group, ctx.system().alphabet(comp.t), images)?;
    if !hom.is_surjective() {
        return Err(Error::InvariantViolation(format!("alpha at time {} is not surjective", comp.t)));
    }
    Ok(hom)
}

/// Computes `u1 ∘ u2` from the elementary groups at `(0, t)` alone.
///
/// Each time slice is multiplied in its elementary group and the results are
/// stitched back into one tensor; overlapping slices must agree.
pub fn multiply_via_elementary(ctx: &GeneratorContext, u1: &TensorU, u2: &TensorU) -> Result<TensorU> {
    let layout = ctx.layout();
    let mut out: Vec<Option<usize>> = vec![None; layout.len()];
    for t in ctx.system().times() {
        let table = elementary_group(ctx, 0, t)?;
        let (_, idx) = slice_indices(ctx, IndexPair::new(0, t))?;
        let a = table
            .element_index(&slice(u1, &idx))
            .ok_or(Error::UnrealizedTriangle { anchor: table.anchor })?;
        let b = table
            .element_index(&slice(u2, &idx))
            .ok_or(Error::UnrealizedTriangle { anchor: table.anchor })?;
        let product = &table.elements[table.multiply(a, b)];
        for (&p, &l) in idx.iter().zip(product) {
            match out[p] {
                Some(prev) if prev != l => return Err(Error::InconsistentStitch(layout.pairs()[p])),
                _ => out[p] = Some(l),
            }
        }
    }
    let labels = out
        .into_iter()
        .enumerate()
        .map(|(p, l)| l.ok_or(Error::InconsistentStitch(layout.pairs()[p])))
        .collect::<Result<Vec<_>>>()?;
    Ok(TensorU { labels })
}
