//! Generator bases, the two encoders, decoding and the alphabet matrix.

use std::collections::HashSet;

use super::granule::{spectral_granule, time_granule};
use super::{GroupSystem, Sequence};
use crate::error::{Error, Result};
use crate::group::GroupOps;
use crate::index::{IndexLayout, IndexPair};

/// A choice of one transversal entry per index pair, in layout order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorR {
    /// Transversal index chosen at each layout position.
    pub choice: Vec<usize>,
}

impl TensorR {
    /// The tensor choosing the identity generator everywhere.
    pub fn identity(len: usize) -> Self {
        TensorR { choice: vec![0; len] }
    }

    /// True when every choice is the identity.
    pub fn is_identity(&self) -> bool {
        self.choice.iter().all(|&c| c == 0)
    }
}

/// One transversal of generators per index pair.
///
/// Entry 0 of each transversal is the identity member. Every other entry is
/// the least member of its spectral-granule coset, so it is supported on
/// `[t, t+k]` with nontrivial letters at both ends.
#[derive(Debug, Clone)]
pub struct GeneratorBasis {
    system: GroupSystem,
    layout: IndexLayout,
    transversals: Vec<Vec<usize>>,
    /// `prefix_letters[o][m + 1][x]`: letter `x` at time `t0 + o` occurs in
    /// some member supported on `[t0 + o, t0 + o + m]`.
    prefix_letters: Vec<Vec<Vec<bool>>>,
}

/// Extracts the canonical generator basis and verifies its properties.
///
/// Checks that every generator has span exactly `k + 1`, that each
/// transversal has the order of the time-domain granule, that its entries lie
/// in distinct time-domain cosets and have distinct letters at time `t`, and
/// that the transversal sizes multiply to the order of the system.
pub fn extract_basis(sys: &GroupSystem) -> Result<GeneratorBasis> {
    let ell = sys.ell()?;
    let (t0, t1) = sys.window();
    let layout = IndexLayout::new(ell, t0, t1);
    let mut transversals = Vec::with_capacity(layout.len());
    for &pair in layout.pairs() {
        let gamma = spectral_granule(sys, pair.t, pair.k as i64)?;
        let reps = gamma.representatives();
        verify_transversal(sys, pair, &reps)?;
        transversals.push(reps);
    }
    let product = transversals
        .iter()
        .try_fold(1usize, |acc, tr| acc.checked_mul(tr.len()))
        .unwrap_or(usize::MAX);
    if product != sys.order() {
        return Err(Error::NotComplete {
            product,
            order: sys.order(),
        });
    }
    let prefix_letters = sys
        .times()
        .map(|i| {
            (-1..=ell as i64)
                .map(|m| {
                    let mut mask = vec![false; sys.alphabet(i).order()];
                    for &a in sys.span_subgroup(i, i + m).members() {
                        mask[sys.letter(a, i)] = true;
                    }
                    mask
                })
                .collect()
        })
        .collect();
    Ok(GeneratorBasis {
        system: sys.clone(),
        layout,
        transversals,
        prefix_letters,
    })
}

fn verify_transversal(sys: &GroupSystem, pair: IndexPair, reps: &[usize]) -> Result<()> {
    let fail = |what: &str| Err(Error::InvariantViolation(format!("generators at {pair}: {what}")));
    if reps.first() != Some(&0) {
        return fail("entry 0 is not the identity");
    }
    for &g in &reps[1..] {
        let s = sys.member(g);
        let first = s.iter().position(|&x| x != 0).map(|o| sys.window().0 + o as i64);
        let last = s.iter().rposition(|&x| x != 0).map(|o| sys.window().0 + o as i64);
        if first != Some(pair.t) || last != Some(pair.end()) {
            return fail("a generator does not have span exactly k+1");
        }
    }
    let lambda = time_granule(sys, pair.t, pair.k as i64)?;
    if lambda.order() != reps.len() {
        return fail("transversal size differs from the time-domain granule order");
    }
    let cosets: HashSet<Option<usize>> = reps.iter().map(|&g| lambda.project(g)).collect();
    if cosets.len() != reps.len() || cosets.contains(&None) {
        return fail("entries do not lie in distinct time-domain cosets");
    }
    let letters: HashSet<usize> = reps.iter().map(|&g| sys.letter(g, pair.t)).collect();
    if letters.len() != reps.len() {
        return fail("entries share a letter at their start time");
    }
    Ok(())
}

impl GeneratorBasis {
    /// The underlying system.
    pub fn system(&self) -> &GroupSystem {
        &self.system
    }

    /// The index tensor layout.
    pub fn layout(&self) -> &IndexLayout {
        &self.layout
    }

    /// Controllability index.
    pub fn ell(&self) -> usize {
        self.layout.ell()
    }

    /// Transversal (member indices) at a layout position.
    pub fn transversal(&self, pos: usize) -> &[usize] {
        &self.transversals[pos]
    }

    /// Transversal at an index pair.
    pub fn transversal_at(&self, pair: IndexPair) -> Result<&[usize]> {
        Ok(&self.transversals[self.layout.require(pair)?])
    }

    /// Transversal sizes in layout order.
    pub fn sizes(&self) -> Vec<usize> {
        self.transversals.iter().map(Vec::len).collect()
    }

    /// Generator sequence `choice` at layout position `pos`.
    pub fn generator(&self, pos: usize, choice: usize) -> &Sequence {
        self.system.member(self.transversals[pos][choice])
    }

    /// Number of tensors, equal to the system order.
    pub fn tensor_count(&self) -> usize {
        self.transversals.iter().map(Vec::len).product()
    }

    /// The `n`-th tensor in mixed-radix order, last position fastest.
    pub fn tensor_from_index(&self, mut n: usize) -> TensorR {
        let mut choice = vec![0; self.layout.len()];
        for (pos, tr) in self.transversals.iter().enumerate().rev() {
            choice[pos] = n % tr.len();
            n /= tr.len();
        }
        TensorR { choice }
    }

    /// All tensors in mixed-radix order.
    pub fn all_tensors(&self) -> impl Iterator<Item = TensorR> + '_ {
        (0..self.tensor_count()).map(|n| self.tensor_from_index(n))
    }

    /// Positions whose transversal has more than one entry.
    pub fn nontrivial_positions(&self) -> Vec<usize> {
        (0..self.layout.len()).filter(|&p| self.transversals[p].len() > 1).collect()
    }

    /// Checks that a tensor fits this basis.
    pub fn check_tensor(&self, r: &TensorR) -> Result<()> {
        if r.choice.len() != self.layout.len() {
            return Err(Error::PreconditionViolated(format!(
                "tensor has {} entries, layout has {}",
                r.choice.len(),
                self.layout.len()
            )));
        }
        for (pos, (&c, tr)) in r.choice.iter().zip(&self.transversals).enumerate() {
            if c >= tr.len() {
                return Err(Error::PreconditionViolated(format!(
                    "choice {c} at {} exceeds transversal size {}",
                    self.layout.pairs()[pos],
                    tr.len()
                )));
            }
        }
        Ok(())
    }

    fn encode_with(&self, r: &TensorR, slots: impl Fn(i64) -> Vec<usize>) -> Result<Sequence> {
        self.check_tensor(r)?;
        let sys = &self.system;
        let a: Sequence = sys
            .times()
            .map(|t| {
                let g = sys.alphabet(t);
                g.product(slots(t).into_iter().map(|pos| {
                    let s = self.generator(pos, r.choice[pos]);
                    s[sys.offset(t)]
                }))
            })
            .collect();
        if sys.index_of(&a).is_none() {
            return Err(Error::NotAMember);
        }
        Ok(a)
    }
}

/// Time-domain encoder: at each time, generators starting latest come first,
/// shorter spans before longer ones.
pub fn encode_time_domain(basis: &GeneratorBasis, r: &TensorR) -> Result<Sequence> {
    basis.encode_with(r, |t| basis.layout.time_domain_slots(t))
}

/// Spectral encoder: at each time, shorter spans come first, generators
/// starting latest first within a span.
pub fn encode_spectral_domain(basis: &GeneratorBasis, r: &TensorR) -> Result<Sequence> {
    basis.encode_with(r, |t| basis.layout.spectral_slots(t))
}

/// Inverts [`encode_time_domain`] by peeling generators off the right.
///
/// The time-domain encoding equals the product of generator sequences ordered
/// by start time descending and span ascending. Peeling starts with the
/// rightmost factor; at step `(m, i)` the unique transversal entry is the one
/// whose removal leaves a letter at time `i` that is realized by members
/// supported on `[i, i+m-1]`.
pub fn decode_to_tensor(basis: &GeneratorBasis, a: &[usize]) -> Result<TensorR> {
    let sys = &basis.system;
    if sys.index_of(a).is_none() {
        return Err(Error::NotAMember);
    }
    let mut residual: Sequence = a.to_vec();
    let mut choice = vec![0; basis.layout.len()];
    for i in sys.times() {
        let o = sys.offset(i);
        for m in (0..=basis.ell()).rev() {
            let Some(pos) = basis.layout.position(IndexPair::new(m, i)) else {
                continue;
            };
            let allowed = &basis.prefix_letters[o][m];
            let mut found = None;
            for (c, &g) in basis.transversals[pos].iter().enumerate() {
                let next = sys.multiply(&residual, &sys.invert(sys.member(g)));
                if allowed[next[o]] {
                    if found.is_some() {
                        return Err(Error::InvariantViolation(format!("ambiguous generator at ({m},{i})")));
                    }
                    found = Some((c, next));
                }
            }
            let (c, next) = found
                .ok_or_else(|| Error::InvariantViolation(format!("no generator matches at ({m},{i})")))?;
            choice[pos] = c;
            residual = next;
        }
        if residual[o] != 0 {
            return Err(Error::InvariantViolation(format!("letter at time {i} not cleared")));
        }
    }
    Ok(TensorR { choice })
}

/// The letters `r_{j,k}^{t-j}` of the generators active at time `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphabetMatrix {
    /// The time the matrix describes.
    pub t: i64,
    /// Controllability index.
    pub ell: usize,
    /// `entries[j][k - j]` is the time-`t` letter of the generator chosen at
    /// `(k, t - j)`; pairs outside the window contribute the identity.
    pub entries: Vec<Vec<usize>>,
}

impl AlphabetMatrix {
    /// Entry `(j, k)` for `j <= k`.
    pub fn entry(&self, j: usize, k: usize) -> usize {
        self.entries[j][k - j]
    }

    /// Product of the entries, `j` ascending and `k` ascending within a row.
    pub fn fold(&self, alphabet: &impl GroupOps) -> usize {
        self.entries
            .iter()
            .flatten()
            .fold(0, |acc, &x| alphabet.op(acc, x))
    }
}

/// The alphabet matrix of tensor `r` at time `t`.
pub fn alphabet_matrix(basis: &GeneratorBasis, r: &TensorR, t: i64) -> Result<AlphabetMatrix> {
    basis.check_tensor(r)?;
    let sys = &basis.system;
    let (t0, t1) = sys.window();
    if t < t0 || t > t1 {
        return Err(Error::OutOfWindow(format!("time {t} on window [{t0},{t1}]")));
    }
    let ell = basis.ell();
    let entries = (0..=ell)
        .map(|j| {
            (j..=ell)
                .map(|k| match basis.layout.position(IndexPair::new(k, t - j as i64)) {
                    Some(pos) => basis.generator(pos, r.choice[pos])[sys.offset(t)],
                    None => 0,
                })
                .collect()
        })
        .collect();
    Ok(AlphabetMatrix { t, ell, entries })
}

/// True when the system is the product of its generator transversals: the
/// time-domain encoder maps the tensors one-to-one onto the members.
pub fn is_complete(basis: &GeneratorBasis) -> Result<bool> {
    if basis.tensor_count() != basis.system.order() {
        return Ok(false);
    }
    let mut seen = HashSet::with_capacity(basis.tensor_count());
    for r in basis.all_tensors() {
        let a = encode_time_domain(basis, &r)?;
        if basis.system.index_of(&a).is_none() || !seen.insert(a) {
            return Ok(false);
        }
    }
    Ok(true)
}
