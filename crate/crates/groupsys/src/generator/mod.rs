//! The decomposition group, the generator group and their elementary groups.
//!
//! A [`GeneratorContext`] fixes a generator basis. Generator tensors
//! ([`TensorR`]) and label tensors ([`TensorU`]) share the index layout; the
//! relabeling `β` between them keeps the transversal index as the label, so
//! label 0 is always the identity generator. The generator group `(𝒰,∘)` is
//! identified with the member indices of the system through the bijection
//! `u ↦ encode(u)`, which makes the context itself a [`GroupOps`].

mod egrp;
mod elementary;

pub(crate) use egrp::parse_egrp_block;
pub(crate) use elementary::group_name;
pub use egrp::{parse_egrp, parse_egrp_list, write_egrp};
pub use elementary::{
    alpha_hom, alpha_t, component_group_r, elementary_group, multiply_via_elementary, nested_hom,
    theta_t, triangle, ComponentGroup, ElementaryGroupTable, NestedHom, Triangle,
};

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::{is_normal, FiniteGroup, GroupOps, Subgroup};
use crate::index::{IndexLayout, IndexPair};
use crate::system::{decode_to_tensor, encode_time_domain, extract_basis, GeneratorBasis, GroupSystem, Sequence, TensorR};

/// A tensor of generator labels, one per index pair in layout order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorU {
    /// Label at each layout position; label 0 is the identity generator.
    pub labels: Vec<usize>,
}

/// Replaces each chosen generator by its label.
pub fn beta(r: &TensorR) -> TensorU {
    TensorU {
        labels: r.choice.clone(),
    }
}

/// Replaces each label by the generator it names.
pub fn beta_inv(u: &TensorU) -> TensorR {
    TensorR {
        choice: u.labels.clone(),
    }
}

/// A system together with its generator basis and label sets.
#[derive(Debug)]
pub struct GeneratorContext {
    basis: GeneratorBasis,
    tensors: Vec<TensorU>,
    member_of: HashMap<TensorU, usize>,
    elementary: Mutex<HashMap<IndexPair, Arc<ElementaryGroupTable>>>,
    generator_group: OnceLock<FiniteGroup>,
}

impl GroupOps for GeneratorContext {
    fn order(&self) -> usize {
        self.tensors.len()
    }

    fn op(&self, a: usize, b: usize) -> usize {
        let u = circ(self, &self.tensors[a], &self.tensors[b]).expect("tensors of the context");
        self.member_of[&u]
    }

    fn inv(&self, a: usize) -> usize {
        let inverse = self.system().inv(a);
        self.member_of[&self.tensors[inverse]]
    }
}

impl GeneratorContext {
    /// Extracts the basis of `sys` and builds the context.
    pub fn from_system(sys: &GroupSystem) -> Result<Self> {
        Self::new(extract_basis(sys)?)
    }

    /// Builds the context of a basis, decoding every member once.
    pub fn new(basis: GeneratorBasis) -> Result<Self> {
        let sys = basis.system();
        let mut tensors = Vec::with_capacity(sys.order());
        for a in sys.members() {
            let r = decode_to_tensor(&basis, a)?;
            if &encode_time_domain(&basis, &r)? != a {
                return Err(Error::InvariantViolation("decoding does not invert encoding".into()));
            }
            tensors.push(beta(&r));
        }
        let member_of = tensors.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
        Ok(GeneratorContext {
            basis,
            tensors,
            member_of,
            elementary: Mutex::new(HashMap::new()),
            generator_group: OnceLock::new(),
        })
    }

    /// The generator basis.
    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    /// The underlying system.
    pub fn system(&self) -> &GroupSystem {
        self.basis.system()
    }

    /// The index layout.
    pub fn layout(&self) -> &IndexLayout {
        self.basis.layout()
    }

    /// Controllability index.
    pub fn ell(&self) -> usize {
        self.basis.ell()
    }

    /// Size of the label set at each layout position.
    pub fn label_sizes(&self) -> Vec<usize> {
        self.basis.sizes()
    }

    /// Label tensor of member `i`.
    pub fn tensor(&self, i: usize) -> &TensorU {
        &self.tensors[i]
    }

    /// All label tensors, indexed by member.
    pub fn tensors(&self) -> &[TensorU] {
        &self.tensors
    }

    /// Member index of a label tensor.
    pub fn member_of(&self, u: &TensorU) -> Option<usize> {
        self.member_of.get(u).copied()
    }

    /// The identity label tensor.
    pub fn identity(&self) -> TensorU {
        TensorU {
            labels: vec![0; self.layout().len()],
        }
    }

    /// `(𝒰,∘)` as an explicit, fully verified group table.
    ///
    /// Builds an `n × n` table and checks associativity exhaustively, so this
    /// is meant for small systems.
    pub fn generator_group(&self) -> &FiniteGroup {
        self.generator_group.get_or_init(|| {
            FiniteGroup::from_ops(&format!("U({})", self.system().name()), self)
                .expect("the generator group is a group")
        })
    }

    pub(crate) fn cached_elementary(&self, pair: IndexPair) -> Option<Arc<ElementaryGroupTable>> {
        self.elementary.lock().expect("cache lock").get(&pair).cloned()
    }

    pub(crate) fn store_elementary(&self, table: ElementaryGroupTable) -> Arc<ElementaryGroupTable> {
        let table = Arc::new(table);
        self.elementary
            .lock()
            .expect("cache lock")
            .insert(table.anchor, Arc::clone(&table));
        table
    }

    /// Members of `(𝒰,∘)` whose labels vanish outside `positions`.
    pub fn supported_on(&self, positions: &[usize]) -> Subgroup {
        let allowed: HashSet<usize> = positions.iter().copied().collect();
        let members = (0..self.tensors.len())
            .filter(|&i| {
                self.tensors[i]
                    .labels
                    .iter()
                    .enumerate()
                    .all(|(p, &l)| l == 0 || allowed.contains(&p))
            })
            .collect();
        Subgroup::from_sorted_unchecked(members)
    }

    fn check(&self, u: &TensorU) -> Result<()> {
        self.basis.check_tensor(&beta_inv(u))
    }
}

/// The decomposition-group product: `decode(encode(r1) · encode(r2))`.
pub fn star(ctx: &GeneratorContext, r1: &TensorR, r2: &TensorR) -> Result<TensorR> {
    let sys = ctx.system();
    let a = encode_time_domain(ctx.basis(), r1)?;
    let b = encode_time_domain(ctx.basis(), r2)?;
    decode_to_tensor(ctx.basis(), &sys.multiply(&a, &b))
}

/// The generator-group product, transported from [`star`] through `β`.
pub fn circ(ctx: &GeneratorContext, u1: &TensorU, u2: &TensorU) -> Result<TensorU> {
    ctx.check(u1)?;
    ctx.check(u2)?;
    Ok(beta(&star(ctx, &beta_inv(u1), &beta_inv(u2))?))
}

/// The lower elementary group at `(k, t)`: label tensors supported on the
/// lower triangle of `(k, t)`.
///
/// Verified equal to the image of the members supported on `[t, t+k]`, and
/// normal in `(𝒰,∘)`.
pub fn lower_elementary_group(ctx: &GeneratorContext, k: usize, t: i64) -> Result<Subgroup> {
    let layout = ctx.layout();
    let anchor = IndexPair::new(k, t);
    let (t0, t1) = layout.window();
    if t < t0 || anchor.end() > t1 {
        return Err(Error::OutOfWindow(format!("lower triangle at {anchor}")));
    }
    let positions: Vec<usize> = layout
        .lower_triangle(anchor)
        .into_iter()
        .filter_map(|p| layout.position(p))
        .collect();
    let sub = ctx.supported_on(&positions);
    let image = ctx.system().span_subgroup(t, anchor.end());
    if sub != image {
        return Err(Error::InvariantViolation(format!(
            "lower elementary group at {anchor} differs from the members supported on [{t},{}]",
            anchor.end()
        )));
    }
    if !is_normal(ctx, &sub)? {
        return Err(Error::InvariantViolation(format!("lower elementary group at {anchor} is not normal")));
    }
    Ok(sub)
}

/// Rebuilds the system as the image of `(𝒰,∘)` under the per-time maps
/// `α^t ∘ (β^t)^{-1} ∘ θ^t`, and checks that it equals the original.
pub fn recover_system_fhgs(ctx: &GeneratorContext) -> Result<GroupSystem> {
    let sys = ctx.system();
    let slots: Vec<Vec<usize>> = sys.times().map(|t| ctx.layout().time_domain_slots(t)).collect();
    let images: Vec<Sequence> = ctx
        .tensors()
        .iter()
        .map(|u| {
            sys.times()
                .zip(&slots)
                .map(|(t, slots)| {
                    let letters = slots
                        .iter()
                        .map(|&pos| ctx.basis().generator(pos, u.labels[pos])[sys.offset(t)]);
                    sys.alphabet(t).product(letters)
                })
                .collect()
        })
        .collect();
    let distinct: HashSet<&Sequence> = images.iter().collect();
    if distinct.len() != images.len() {
        return Err(Error::RecoveryMismatch("the map from (U,∘) is not injective".into()));
    }
    let recovered = GroupSystem::from_members(sys.name(), sys.window(), sys.alphabets().to_vec(), images)
        .map_err(|e| Error::RecoveryMismatch(format!("image is not a group system: {e}")))?;
    if !recovered.same_members(sys) {
        return Err(Error::RecoveryMismatch("recovered member set differs from the original".into()));
    }
    Ok(recovered)
}
