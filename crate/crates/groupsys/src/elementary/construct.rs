//! Bottom-up construction of elementary systems from top-row seeds.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{check_homomorphism_condition, ElementarySystem};
use crate::error::{Error, Result};
use crate::generator::{group_name, ElementaryGroupTable};
use crate::group::{enumerate_extensions, subdirect_product, FiniteGroup, GroupOps, Homomorphism};
use crate::index::{IndexLayout, IndexPair};
use crate::Bounds;

/// The kernel of one extension step and which of its extensions to take.
#[derive(Debug, Clone)]
pub struct KernelChoice {
    /// The kernel `K`; its elements become the labels at the new pair.
    pub kernel: FiniteGroup,
    /// Position in the list returned by
    /// [`enumerate_extensions`](crate::group::enumerate_extensions); 0 is the
    /// direct product.
    pub extension: usize,
}

impl KernelChoice {
    /// The trivial kernel.
    pub fn trivial() -> Self {
        KernelChoice {
            kernel: FiniteGroup::trivial(),
            extension: 0,
        }
    }
}

/// Kernel choices per row, with optional per-pair overrides.
///
/// Rows without an entry use the trivial kernel.
#[derive(Debug, Clone, Default)]
pub struct ConstructionStrategy {
    /// Choice for each row `m < ℓ`, indexed by `m`.
    pub rows: BTreeMap<usize, KernelChoice>,
    /// Choices for individual pairs, taking precedence over `rows`.
    pub overrides: BTreeMap<IndexPair, KernelChoice>,
}

impl ConstructionStrategy {
    /// Sets the choice for every pair of row `m`.
    pub fn with_row(mut self, m: usize, kernel: FiniteGroup, extension: usize) -> Self {
        self.rows.insert(m, KernelChoice { kernel, extension });
        self
    }

    /// Sets the choice for one pair.
    pub fn with_override(mut self, pair: IndexPair, kernel: FiniteGroup, extension: usize) -> Self {
        self.overrides.insert(pair, KernelChoice { kernel, extension });
        self
    }

    fn choice(&self, pair: IndexPair) -> KernelChoice {
        self.overrides
            .get(&pair)
            .or_else(|| self.rows.get(&pair.k))
            .cloned()
            .unwrap_or_else(KernelChoice::trivial)
    }
}

/// Builds an elementary system of depth `ℓ + 1` on `window`, row by row from
/// the top.
///
/// Row `ℓ` holds the seed groups on single-label triangles: one seed is
/// replicated over the row, otherwise there must be one seed per top-row
/// pair. Each lower triangle at `(m, t)` is then an extension, by the kernel
/// the strategy picks, of the subdirect product of the two triangles it
/// covers, glued along the triangle they share. At the window's edges only
/// one covered triangle exists and the extension is taken of it alone.
pub fn construct_elementary_system(
    name: &str,
    ell: usize,
    window: (i64, i64),
    seeds: &[FiniteGroup],
    strategy: &ConstructionStrategy,
    bounds: &Bounds,
) -> Result<ElementarySystem> {
    let (t0, t1) = window;
    if t1 < t0 || ((t1 - t0) as usize) < ell {
        return Err(Error::PreconditionViolated(format!("window [{t0},{t1}] is shorter than depth {}", ell + 1)));
    }
    let layout = IndexLayout::new(ell, t0, t1);
    let top: Vec<IndexPair> = layout.pairs().iter().copied().filter(|p| p.k == ell).collect();
    if seeds.len() != 1 && seeds.len() != top.len() {
        return Err(Error::PreconditionViolated(format!(
            "expected one seed or {} seeds, found {}",
            top.len(),
            seeds.len()
        )));
    }
    let mut tables: HashMap<IndexPair, Arc<ElementaryGroupTable>> = HashMap::new();
    let mut sizes: HashMap<IndexPair, usize> = HashMap::new();
    for (i, &pair) in top.iter().enumerate() {
        let seed = &seeds[if seeds.len() == 1 { 0 } else { i }];
        if seed.order() > bounds.order_cap {
            return Err(Error::BoundExceeded {
                what: format!("seed order {}", seed.order()),
                limit: bounds.order_cap,
            });
        }
        let elements = (0..seed.order()).map(|l| vec![l]).collect();
        let table = ElementaryGroupTable::new(pair, vec![pair], elements, seed.clone().renamed(&group_name(pair)))?;
        tables.insert(pair, Arc::new(table));
        sizes.insert(pair, seed.order());
    }
    for m in (0..ell).rev() {
        for t in t0..=t1 - m as i64 {
            let pair = IndexPair::new(m, t);
            let table = extend_pair(&layout, &tables, pair, &strategy.choice(pair), bounds)?;
            sizes.insert(pair, strategy.choice(pair).kernel.order());
            tables.insert(pair, Arc::new(table));
        }
    }
    let label_sizes = layout.pairs().iter().map(|p| sizes[p]).collect();
    let ordered = layout.pairs().iter().map(|p| tables[p].clone()).collect();
    let es = ElementarySystem::new(name, layout, label_sizes, ordered)?;
    if let Some(v) = check_homomorphism_condition(&es).violation {
        return Err(Error::HomomorphismCondition(v.to_string()));
    }
    Ok(es)
}

fn restriction_hom(source: &ElementaryGroupTable, target: Option<&Arc<ElementaryGroupTable>>) -> Result<Homomorphism> {
    match target {
        Some(c) => Homomorphism::new(&source.group, &c.group, source.restriction_map(c)?),
        None => Homomorphism::new(&source.group, &FiniteGroup::trivial(), vec![0; source.order()]),
    }
}

fn extend_pair(
    layout: &IndexLayout,
    tables: &HashMap<IndexPair, Arc<ElementaryGroupTable>>,
    pair: IndexPair,
    choice: &KernelChoice,
    bounds: &Bounds,
) -> Result<ElementaryGroupTable> {
    let positions = layout.upper_triangle(pair);
    let slot = |p: &IndexPair| positions.iter().position(|q| q == p).expect("subtriangle");
    let place = |v: &mut Vec<usize>, sub: &ElementaryGroupTable, e: usize| {
        for (p, &l) in sub.positions.iter().zip(&sub.elements[e]) {
            v[slot(p)] = l;
        }
    };
    let x = tables.get(&IndexPair::new(pair.k + 1, pair.t));
    let y = tables.get(&IndexPair::new(pair.k + 1, pair.t - 1));
    let (quotient, vectors): (FiniteGroup, Vec<Vec<usize>>) = match (x, y) {
        (Some(x), Some(y)) => {
            let c = tables.get(&IndexPair::new(pair.k + 2, pair.t - 1));
            let sub = subdirect_product(&x.group, &y.group, &restriction_hom(x, c)?, &restriction_hom(y, c)?)?;
            let vectors = sub
                .pairs
                .iter()
                .map(|&(a, b)| {
                    let mut v = vec![0; positions.len()];
                    place(&mut v, x, a);
                    place(&mut v, y, b);
                    v
                })
                .collect();
            (sub.group, vectors)
        }
        (Some(s), None) | (None, Some(s)) => {
            let vectors = (0..s.order())
                .map(|e| {
                    let mut v = vec![0; positions.len()];
                    place(&mut v, s, e);
                    v
                })
                .collect();
            (s.group.clone(), vectors)
        }
        (None, None) => (FiniteGroup::trivial(), vec![vec![0; positions.len()]]),
    };
    let list = enumerate_extensions(&quotient, &choice.kernel, bounds.order_cap)?;
    let ext = list.extensions.get(choice.extension).ok_or_else(|| {
        Error::NoExtensionFound(format!(
            "{pair}: extension {} requested, {} available",
            choice.extension,
            list.extensions.len()
        ))
    })?;
    let nk = choice.kernel.order();
    let own = slot(&pair);
    let raw: Vec<Vec<usize>> = (0..ext.group.order())
        .map(|e| {
            let mut v = vectors[e / nk].clone();
            v[own] = e % nk;
            v
        })
        .collect();
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| raw[a].cmp(&raw[b]));
    let mut rank = vec![0; raw.len()];
    for (r, &e) in order.iter().enumerate() {
        rank[e] = r;
    }
    let n = raw.len();
    let mut table = Vec::with_capacity(n * n);
    for &a in &order {
        for &b in &order {
            table.push(rank[ext.group.op(a, b)]);
        }
    }
    let group = FiniteGroup::from_flat(&group_name(pair), n, table)?;
    let elements = order.iter().map(|&e| raw[e].clone()).collect();
    ElementaryGroupTable::new(pair, positions, elements, group)
}
