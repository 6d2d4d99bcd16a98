//! Normal subgroups from paired sequences, ⊕-groups and normal chains.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::filling::first_non_lower_prefix;
use super::{complementary, normal_orderings, purge, FillingSequence, PairedSequence};
use crate::error::{Error, Result};
use crate::generator::{elementary_group, lower_elementary_group, GeneratorContext};
use crate::group::{
    is_normal, product_of_subgroups, quotient_within, subgroup_closure, FiniteGroup, GroupOps, Homomorphism, Subgroup,
};
use crate::index::{IndexPair, TriangleKind};
use crate::system::GroupSystem;
use crate::Bounds;

fn positions_of(ctx: &GeneratorContext, pairs: &BTreeSet<IndexPair>) -> Vec<usize> {
    pairs.iter().filter_map(|&p| ctx.layout().position(p)).collect()
}

/// The product of the lower elementary groups of a lower paired sequence.
///
/// Verified equal to the set of label tensors that are the identity on every
/// pair outside the lower triangles, that is on the complementary upper
/// triangles.
pub fn normal_subgroup_from_ps(ctx: &GeneratorContext, ps: &PairedSequence) -> Result<Subgroup> {
    if ps.kind != TriangleKind::Lower {
        return Err(Error::PreconditionViolated("expected a lower paired sequence".into()));
    }
    let mut product = Subgroup::trivial();
    for p in &ps.pairs {
        let lower = lower_elementary_group(ctx, p.k, p.t)?;
        product = product_of_subgroups(ctx, &product, &lower)?;
    }
    let expected = ctx.supported_on(&positions_of(ctx, &ps.covered(ctx.layout())));
    if product != expected {
        return Err(Error::InvariantViolation(
            "product of lower elementary groups differs from the tensors supported on their union".into(),
        ));
    }
    Ok(product)
}

/// The ⊕-group of an upper paired sequence: sequences of upper triangles,
/// multiplied triangle by triangle in the elementary groups.
#[derive(Debug, Clone)]
pub struct OplusGroup {
    /// The upper paired sequence.
    pub pairs: Vec<IndexPair>,
    /// Realized sequences; each is one elementary-group element index per pair.
    pub elements: Vec<Vec<usize>>,
    /// Operation on element indices.
    pub group: FiniteGroup,
    /// The normal subgroup of the complementary lower sequence.
    pub kernel: Subgroup,
}

/// Builds the ⊕-group of `ps_u` and verifies that slicing is a surjective
/// homomorphism from `(𝒰,∘)` whose kernel is the normal subgroup of the
/// complementary lower sequence, so the ⊕-group is isomorphic to the quotient.
pub fn oplus_group(ctx: &GeneratorContext, ps_u: &PairedSequence) -> Result<OplusGroup> {
    if ps_u.kind != TriangleKind::Upper {
        return Err(Error::PreconditionViolated("expected an upper paired sequence".into()));
    }
    let tables = ps_u
        .pairs
        .iter()
        .map(|p| elementary_group(ctx, p.k, p.t))
        .collect::<Result<Vec<_>>>()?;
    let layout = ctx.layout();
    let idx: Vec<Vec<usize>> = tables
        .iter()
        .map(|t| t.positions.iter().map(|&p| layout.position(p).expect("clipped triangle")).collect())
        .collect();
    let seq_of: Vec<Vec<usize>> = ctx
        .tensors()
        .iter()
        .map(|u| {
            tables
                .iter()
                .zip(&idx)
                .map(|(table, idx)| {
                    let labels: Vec<usize> = idx.iter().map(|&p| u.labels[p]).collect();
                    table.element_index(&labels).expect("realized slice")
                })
                .collect()
        })
        .collect();
    let mut elements = seq_of.clone();
    elements.sort();
    elements.dedup();
    let index: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let anchor = ps_u.pairs.first().copied().unwrap_or(IndexPair::new(0, layout.window().0));
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            let c: Vec<usize> = tables.iter().zip(a.iter().zip(b)).map(|(t, (&x, &y))| t.multiply(x, y)).collect();
            table.push(*index.get(c.as_slice()).ok_or(Error::WellDefinednessFailure { anchor })?);
        }
    }
    let group = FiniteGroup::from_flat("oplus", n, table).map_err(|_| Error::WellDefinednessFailure { anchor })?;
    let images = seq_of.iter().map(|s| index[s.as_slice()]).collect();
    let hom = Homomorphism::new(ctx.generator_group(), &group, images)?;
    let kernel = normal_subgroup_from_ps(ctx, &complementary(layout, ps_u))?;
    if !hom.is_surjective() || hom.kernel() != kernel {
        return Err(Error::InvariantViolation(
            "the ⊕-group is not the quotient by the complementary normal subgroup".into(),
        ));
    }
    Ok(OplusGroup {
        pairs: ps_u.pairs.clone(),
        elements,
        group,
        kernel,
    })
}

/// One step of a normal chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    /// The pair filled at this step.
    pub added: IndexPair,
    /// The normal subgroup after filling it.
    pub subgroup: Subgroup,
    /// Index of the previous subgroup in this one.
    pub cosets: usize,
    /// Coset representatives: the generator tensors labelled `0..cosets` at
    /// the added pair, as members of `(𝒰,∘)`.
    pub reps: Vec<usize>,
}

/// A chain of normal subgroups of `(𝒰,∘)`, one step per filled pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalChain {
    /// The subgroup the chain starts from.
    pub base: Subgroup,
    /// Steps in filling order.
    pub steps: Vec<ChainStep>,
}

impl NormalChain {
    /// The per-step quotient orders.
    pub fn quotient_orders(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.cosets).collect()
    }

    /// The last subgroup of the chain.
    pub fn top(&self) -> &Subgroup {
        self.steps.last().map_or(&self.base, |s| &s.subgroup)
    }

    /// Number of distinct subgroups along the chain, the base included.
    pub fn distinct_subgroups(&self) -> usize {
        1 + self.steps.iter().filter(|s| s.cosets > 1).count()
    }
}

/// The normal chain of a normal filling sequence.
pub fn normal_chain(ctx: &GeneratorContext, f: &FillingSequence) -> Result<NormalChain> {
    normal_chain_seeded(ctx, &PairedSequence::empty(TriangleKind::Lower), &f.walk)
}

/// The normal chain above the subgroup of a lower paired sequence `base`.
///
/// `walk` must fill exactly the pairs outside the base triangles, and every
/// prefix together with the base must be a union of lower triangles.
pub fn normal_chain_seeded(ctx: &GeneratorContext, base: &PairedSequence, walk: &[IndexPair]) -> Result<NormalChain> {
    let layout = ctx.layout();
    let base_set = base.covered(layout);
    let mut seen = base_set.clone();
    for &p in walk {
        if !layout.contains(p) || !seen.insert(p) {
            return Err(Error::InvalidFilling(format!("{p} is outside the tensor or filled twice")));
        }
    }
    if seen.len() != layout.len() {
        return Err(Error::InvalidFilling("the walk does not cover the index tensor".into()));
    }
    if let Some(prefix) = first_non_lower_prefix(layout, &base_set, walk).first_violation {
        return Err(Error::NotNormalFilling { prefix });
    }
    let base_group = normal_subgroup_from_ps(ctx, base)?;
    let mut filled = base_set;
    let mut previous = base_group.clone();
    let mut steps = Vec::with_capacity(walk.len());
    for &p in walk {
        filled.insert(p);
        let anchors: Vec<IndexPair> = filled.iter().copied().collect();
        let subgroup = normal_subgroup_from_ps(ctx, &purge(layout, TriangleKind::Lower, &anchors))?;
        if !previous.is_subset(&subgroup) {
            return Err(Error::InvariantViolation(format!("chain is not ascending at {p}")));
        }
        if !is_normal(ctx, &subgroup)? {
            return Err(Error::InvariantViolation(format!("chain subgroup after {p} is not normal")));
        }
        let quotient = quotient_within(ctx, &subgroup, &previous)?;
        let pos = layout.position(p).expect("pair in layout");
        let reps: Vec<usize> = (0..ctx.label_sizes()[pos])
            .map(|label| {
                let mut u = ctx.identity();
                u.labels[pos] = label;
                ctx.member_of(&u).expect("generator tensors are realized")
            })
            .collect();
        let cosets: HashSet<Option<usize>> = reps.iter().map(|&r| quotient.project(r)).collect();
        if cosets.contains(&None) || cosets.len() != reps.len() || quotient.order() != reps.len() {
            return Err(Error::InvariantViolation(format!(
                "generators at {p} are not a complete set of coset representatives"
            )));
        }
        steps.push(ChainStep {
            added: p,
            subgroup: subgroup.clone(),
            cosets: quotient.order(),
            reps,
        });
        previous = subgroup;
    }
    Ok(NormalChain {
        base: base_group,
        steps,
    })
}

/// The member built from one representative per step, the earliest step
/// leftmost.
pub fn chain_product(ctx: &GeneratorContext, chain: &NormalChain, labels: &[usize]) -> usize {
    chain
        .steps
        .iter()
        .zip(labels)
        .fold(0, |acc, (step, &l)| ctx.op(acc, step.reps[l]))
}

/// Rebuilds the member set by composing representatives along the chain and
/// checks that it equals the original system.
pub fn reconstruct_from_chain(ctx: &GeneratorContext, chain: &NormalChain) -> Result<GroupSystem> {
    let mut current: Vec<usize> = chain.base.members().to_vec();
    for step in &chain.steps {
        current = current
            .iter()
            .flat_map(|&x| step.reps.iter().map(move |&g| (x, g)))
            .map(|(x, g)| ctx.op(x, g))
            .collect();
    }
    let distinct: HashSet<usize> = current.iter().copied().collect();
    if distinct.len() != current.len() {
        return Err(Error::RecoveryMismatch("two representative products coincide".into()));
    }
    let sys = ctx.system();
    let members = current.iter().map(|&i| sys.member(i).clone()).collect();
    let rebuilt = GroupSystem::from_members(sys.name(), sys.window(), sys.alphabets().to_vec(), members)
        .map_err(|e| Error::RecoveryMismatch(e.to_string()))?;
    if !rebuilt.same_members(sys) {
        return Err(Error::RecoveryMismatch("rebuilt member set differs from the original".into()));
    }
    Ok(rebuilt)
}

/// One step of an eigentriangle expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenStep {
    /// The pair whose eigentriangles are added.
    pub added: IndexPair,
    /// Elementary-group elements nontrivial only at `added`.
    pub eigentriangles: Vec<usize>,
    /// Subgroup generated by all eigentriangles added so far.
    pub subgroup: Subgroup,
    /// Index of the previous subgroup in this one.
    pub cosets: usize,
}

/// An eigentriangle expansion of the elementary group at `(0, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigentriangleChain {
    /// Time of the triangle's lower vertex.
    pub t: i64,
    /// Steps, one per pair with a nontrivial label set.
    pub steps: Vec<EigenStep>,
}

/// Expands the elementary group at `(0, t)` along its eigentriangles.
///
/// Pairs are visited in the time-reversed filling order. Every pair with a
/// nontrivial label set must carry an eigentriangle for each label, and the
/// eigentriangles together must generate the whole elementary group.
pub fn eigentriangle_expansion(ctx: &GeneratorContext, t: i64) -> Result<EigentriangleChain> {
    let table = elementary_group(ctx, 0, t)?;
    let layout = ctx.layout();
    let mut order: Vec<(usize, IndexPair)> = table.positions.iter().copied().enumerate().collect();
    order.sort_by_key(|&(_, p)| (std::cmp::Reverse(p.t), p.k));
    let mut steps = Vec::new();
    let mut gens = Vec::new();
    let mut previous = Subgroup::trivial();
    for (i, p) in order {
        let size = ctx.label_sizes()[layout.position(p).expect("pair in layout")];
        if size == 1 {
            continue;
        }
        let eigen: Vec<usize> = (0..table.order())
            .filter(|&e| {
                let tri = &table.elements[e];
                tri[i] != 0 && tri.iter().enumerate().all(|(j, &l)| j == i || l == 0)
            })
            .collect();
        if eigen.len() + 1 != size {
            return Err(Error::InvariantViolation(format!("missing eigentriangles at {p} in the group at (0,{t})")));
        }
        gens.extend(&eigen);
        let subgroup = subgroup_closure(&table.group, &gens);
        let cosets = subgroup.order() / previous.order();
        previous = subgroup.clone();
        steps.push(EigenStep {
            added: p,
            eigentriangles: eigen,
            subgroup,
            cosets,
        });
    }
    if previous.order() != table.order() {
        return Err(Error::InvariantViolation(format!(
            "eigentriangles do not generate the group at (0,{t})"
        )));
    }
    Ok(EigentriangleChain { t, steps })
}

/// Normal chains of a block code, one per normal filling order.
#[derive(Debug, Clone)]
pub struct BlockCodeChains {
    /// Code length.
    pub length: usize,
    /// True when some generator spans the whole code length.
    pub full_span_generator: bool,
    /// Each filling order with its chain.
    pub chains: Vec<(Vec<IndexPair>, NormalChain)>,
    /// True when the ordering cap cut the enumeration short.
    pub truncated: bool,
}

/// Treats the system as a block code and builds a normal chain for every
/// normal order of filling its index tensor, up to the ordering cap.
///
/// The code must live on a window starting at time 0, and the lower
/// elementary groups of the whole window must generate it.
pub fn block_code_chains(ctx: &GeneratorContext, bounds: &Bounds) -> Result<BlockCodeChains> {
    let layout = ctx.layout();
    let (t0, t1) = layout.window();
    if t0 != 0 {
        return Err(Error::NotABlockCode(format!("window starts at {t0}, not 0")));
    }
    let length = (t1 - t0 + 1) as usize;
    let all = purge(layout, TriangleKind::Lower, layout.pairs());
    if normal_subgroup_from_ps(ctx, &all)?.order() != ctx.order() {
        return Err(Error::NotABlockCode("the lower elementary groups do not generate the code".into()));
    }
    let full_span_generator = layout
        .position(IndexPair::new(length - 1, 0))
        .is_some_and(|p| ctx.label_sizes()[p] > 1);
    let list = normal_orderings(layout, layout.pairs(), bounds.ordering_cap);
    let chains = list
        .orderings
        .into_iter()
        .map(|walk| {
            let chain = normal_chain(ctx, &FillingSequence { walk: walk.clone() })?;
            let product: usize = chain.quotient_orders().iter().product();
            if product != ctx.order() {
                return Err(Error::InvariantViolation("quotient orders do not multiply to the code size".into()));
            }
            Ok((walk, chain))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockCodeChains {
        length,
        full_span_generator,
        chains,
        truncated: list.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{standard_filling, FillingKind};
    use super::*;
    use crate::generator::fixtures::*;
    use crate::system::{encode_time_domain, parse_gsys, TensorR};

    fn ctx(sys: GroupSystem) -> GeneratorContext {
        GeneratorContext::from_system(&sys).unwrap()
    }

    fn p(k: usize, t: i64) -> IndexPair {
        IndexPair::new(k, t)
    }

    #[test]
    fn normal_subgroups_of_paired_sequences() {
        let c = ctx(r2());
        let layout = c.layout().clone();
        assert_eq!(normal_subgroup_from_ps(&c, &PairedSequence::empty(TriangleKind::Lower)).unwrap().order(), 1);
        let full = purge(&layout, TriangleKind::Lower, layout.pairs());
        assert_eq!(normal_subgroup_from_ps(&c, &full).unwrap().order(), 2);
        let single = purge(&layout, TriangleKind::Lower, &[p(1, 0)]);
        assert_eq!(normal_subgroup_from_ps(&c, &single).unwrap().order(), 2);
    }

    #[test]
    fn oplus_groups() {
        let c = ctx(c2());
        let layout = c.layout().clone();
        let single = purge(&layout, TriangleKind::Upper, &[p(0, 1)]);
        let g = oplus_group(&c, &single).unwrap();
        assert_eq!(g.group.order(), elementary_group(&c, 0, 1).unwrap().order());
        let two = purge(&layout, TriangleKind::Upper, &[p(0, 0), p(0, 3)]);
        let g = oplus_group(&c, &two).unwrap();
        let orders: usize = [p(0, 0), p(0, 3)]
            .iter()
            .map(|q| elementary_group(&c, q.k, q.t).unwrap().order())
            .product();
        assert_eq!(g.group.order(), orders);
        assert_eq!(g.group.order() * g.kernel.order(), c.order());
        let empty = oplus_group(&c, &PairedSequence::empty(TriangleKind::Upper)).unwrap();
        assert_eq!(empty.group.order(), 1);
    }

    #[test]
    fn standard_chains_reconstruct_the_system() {
        for sys in [trivial(), r2(), c2(), s3_letters()] {
            let c = ctx(sys);
            for kind in FillingKind::ALL {
                let chain = normal_chain(&c, &standard_filling(c.layout(), kind)).unwrap();
                assert_eq!(chain.quotient_orders().iter().product::<usize>(), c.order());
                assert_eq!(chain.top().order(), c.order());
                assert!(reconstruct_from_chain(&c, &chain).unwrap().same_members(c.system()));
            }
        }
    }

    #[test]
    fn r2_time_reverse_chain_has_two_subgroups() {
        let c = ctx(r2());
        let chain = normal_chain(&c, &standard_filling(c.layout(), FillingKind::TimeRev)).unwrap();
        assert_eq!(chain.distinct_subgroups(), 2);
    }

    #[test]
    fn time_reverse_chain_follows_the_time_domain_encoder() {
        for sys in [c2(), s3_letters()] {
            let c = ctx(sys);
            let f = standard_filling(c.layout(), FillingKind::TimeRev);
            let chain = normal_chain(&c, &f).unwrap();
            for u in c.tensors() {
                let labels: Vec<usize> = f.walk.iter().map(|&q| u.labels[c.layout().position(q).unwrap()]).collect();
                let member = chain_product(&c, &chain, &labels);
                let encoded = encode_time_domain(c.basis(), &TensorR { choice: u.labels.clone() }).unwrap();
                assert_eq!(c.system().member(member), &encoded);
            }
        }
    }

    #[test]
    fn non_normal_walks_are_rejected_with_the_prefix() {
        let c = ctx(c2());
        let mut walk = standard_filling(c.layout(), FillingKind::SpecFwd).walk;
        walk.retain(|&q| q != p(1, 1));
        walk.insert(0, p(1, 1));
        let e = normal_chain(&c, &FillingSequence { walk }).unwrap_err();
        assert!(matches!(e, Error::NotNormalFilling { prefix: 1 }));
    }

    #[test]
    fn seeded_chain_starts_above_the_base() {
        let c = ctx(c2());
        let layout = c.layout().clone();
        let base = purge(&layout, TriangleKind::Lower, &[p(1, 0)]);
        let covered = base.covered(&layout);
        let walk: Vec<IndexPair> = standard_filling(&layout, FillingKind::SpecFwd)
            .walk
            .into_iter()
            .filter(|q| !covered.contains(q))
            .collect();
        let chain = normal_chain_seeded(&c, &base, &walk).unwrap();
        assert_eq!(chain.base.order(), 2);
        assert_eq!(chain.base.order() * chain.quotient_orders().iter().product::<usize>(), c.order());
        assert!(reconstruct_from_chain(&c, &chain).unwrap().same_members(c.system()));
    }

    #[test]
    fn eigentriangle_steps() {
        let c = ctx(trivial());
        assert!(eigentriangle_expansion(&c, 0).unwrap().steps.is_empty());
        let c = ctx(r2());
        assert_eq!(eigentriangle_expansion(&c, 0).unwrap().steps.len(), 1);
        let c = ctx(c2());
        for t in 1..=2 {
            let e = eigentriangle_expansion(&c, t).unwrap();
            assert_eq!(e.steps.len(), 2);
            assert_eq!(e.steps.iter().map(|s| s.cosets).product::<usize>(), 4);
        }
        let c = ctx(s3_letters());
        for t in c.system().times() {
            eigentriangle_expansion(&c, t).unwrap();
        }
    }

    #[test]
    fn block_codes() {
        let bounds = Bounds::default();
        let parity = parse_gsys("system parity\nwindow 0 2\nalphabet all Z2\nseq 1 1 0\nseq 0 1 1\n", &bounds).unwrap();
        assert_eq!(parity.order(), 4);
        let c = ctx(parity);
        let chains = block_code_chains(&c, &bounds).unwrap();
        assert!(!chains.truncated);
        assert!(!chains.full_span_generator);
        assert!(!chains.chains.is_empty());
        for (_, chain) in &chains.chains {
            assert_eq!(chain.quotient_orders().iter().product::<usize>(), 4);
        }
        let c = ctx(r2());
        let chains = block_code_chains(&c, &bounds).unwrap();
        assert!(chains.full_span_generator);
        assert_eq!(chains.chains.len(), 2);
        let c = ctx(trivial());
        assert!(block_code_chains(&c, &bounds).unwrap().chains.iter().all(|(_, ch)| ch.top().order() == 1));
        let shifted = parse_gsys("system s\nwindow 1 2\nalphabet all Z2\nseq 1 1\n", &bounds).unwrap();
        assert!(matches!(block_code_chains(&ctx(shifted), &bounds), Err(Error::NotABlockCode(_))));
    }
}
