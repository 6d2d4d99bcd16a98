//! Group systems on a finite time window.
//!
//! A [`GroupSystem`] is an explicit set of sequences over per-time alphabet
//! groups, closed under the componentwise product. Members are stored in
//! lexicographic order, so the identity sequence is member 0 and the system
//! itself implements [`GroupOps`] on member indices.

mod basis;
mod granule;
mod gsys;

pub use basis::{
    alphabet_matrix, decode_to_tensor, encode_spectral_domain, encode_time_domain, extract_basis, is_complete,
    AlphabetMatrix, GeneratorBasis, TensorR,
};
pub use granule::{spectral_granule, time_granule, zassenhaus_map};
pub use gsys::{parse_gsys, write_gsys};

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupOps, Subgroup};
use crate::Bounds;

/// A letter sequence over the window, one alphabet index per time.
pub type Sequence = Vec<usize>;

/// A finite-window group system with explicitly stored members.
#[derive(Debug, Clone)]
pub struct GroupSystem {
    name: String,
    t0: i64,
    t1: i64,
    alphabets: Vec<FiniteGroup>,
    members: Vec<Sequence>,
    index: HashMap<Sequence, usize>,
    ell: OnceLock<std::result::Result<usize, ()>>,
}

impl GroupOps for GroupSystem {
    fn order(&self) -> usize {
        self.members.len()
    }

    fn op(&self, a: usize, b: usize) -> usize {
        let s = self.multiply(&self.members[a], &self.members[b]);
        self.index[&s]
    }

    fn inv(&self, a: usize) -> usize {
        let s = self.invert(&self.members[a]);
        self.index[&s]
    }
}

impl GroupSystem {
    /// Saturates `seeds` under componentwise products.
    ///
    /// The result is the smallest group system containing the seeds. Every
    /// alphabet letter must occur in some member.
    pub fn from_generators(
        name: &str,
        window: (i64, i64),
        alphabets: Vec<FiniteGroup>,
        seeds: &[Sequence],
        bounds: &Bounds,
    ) -> Result<Self> {
        let shell = Self::shell(name, window, alphabets)?;
        let members = shell.saturate(seeds, bounds)?;
        shell.with_members(members)
    }

    /// Saturates `seeds` and then shrinks each alphabet to the letters that
    /// occur, renumbering letters by their rank in the original alphabet.
    pub(crate) fn from_generators_realized(
        name: &str,
        window: (i64, i64),
        alphabets: Vec<FiniteGroup>,
        seeds: &[Sequence],
        bounds: &Bounds,
    ) -> Result<Self> {
        let shell = Self::shell(name, window, alphabets)?;
        let members = shell.saturate(seeds, bounds)?;
        let mut alphabets = Vec::with_capacity(shell.alphabets.len());
        let mut ranks = Vec::with_capacity(shell.alphabets.len());
        for (o, g) in shell.alphabets.iter().enumerate() {
            let letters: Vec<usize> = members.iter().map(|m| m[o]).collect();
            let sub = Subgroup::new(g, letters.into_iter().collect::<HashSet<_>>().into_iter().collect())?;
            if sub.order() == g.order() {
                alphabets.push(g.clone());
            } else {
                let cyclic = FiniteGroup::cyclic(sub.order());
                let restricted = sub.to_group(g, &format!("{}_t{}", g.name(), window.0 + o as i64))?;
                alphabets.push(if restricted.same_table(&cyclic) { cyclic } else { restricted });
            }
            ranks.push(sub);
        }
        let members = members
            .into_iter()
            .map(|m| m.iter().zip(&ranks).map(|(&x, sub)| sub.rank(x).expect("letter occurs")).collect())
            .collect();
        let shell = Self::shell(name, window, alphabets)?;
        shell.with_members(members)
    }

    fn saturate(&self, seeds: &[Sequence], bounds: &Bounds) -> Result<Vec<Sequence>> {
        for s in seeds {
            self.check_sequence(s)?;
        }
        let identity = vec![0; self.alphabets.len()];
        let mut seen: HashSet<Sequence> = HashSet::from([identity.clone()]);
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for s in seeds {
                let y = self.multiply(&x, s);
                if !seen.contains(&y) {
                    if seen.len() >= bounds.member_cap {
                        return Err(Error::BoundExceeded {
                            what: "group system members".into(),
                            limit: bounds.member_cap,
                        });
                    }
                    seen.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Builds a system from a complete member list, verifying closure.
    ///
    /// A product that leaves the set is reported with the witness pair.
    pub fn from_members(
        name: &str,
        window: (i64, i64),
        alphabets: Vec<FiniteGroup>,
        members: Vec<Sequence>,
    ) -> Result<Self> {
        let shell = Self::shell(name, window, alphabets)?;
        for s in &members {
            shell.check_sequence(s)?;
        }
        let sys = shell.with_members(members)?;
        for a in 0..sys.members.len() {
            for b in 0..sys.members.len() {
                let c = sys.multiply(&sys.members[a], &sys.members[b]);
                if !sys.index.contains_key(&c) {
                    return Err(Error::NotAGroupSystem { a, b });
                }
            }
        }
        Ok(sys)
    }

    fn shell(name: &str, window: (i64, i64), alphabets: Vec<FiniteGroup>) -> Result<Self> {
        let (t0, t1) = window;
        if t1 < t0 || alphabets.len() as i64 != t1 - t0 + 1 {
            return Err(Error::PreconditionViolated(format!(
                "window [{t0},{t1}] needs one alphabet per time"
            )));
        }
        Ok(GroupSystem {
            name: name.to_string(),
            t0,
            t1,
            alphabets,
            members: Vec::new(),
            index: HashMap::new(),
            ell: OnceLock::new(),
        })
    }

    fn check_sequence(&self, s: &Sequence) -> Result<()> {
        if s.len() != self.alphabets.len() {
            return Err(Error::PreconditionViolated(format!(
                "sequence length {} does not match window length {}",
                s.len(),
                self.alphabets.len()
            )));
        }
        for (i, (&x, g)) in s.iter().zip(&self.alphabets).enumerate() {
            if x >= g.order() {
                return Err(Error::PreconditionViolated(format!(
                    "letter {x} at time {} is outside its alphabet",
                    self.t0 + i as i64
                )));
            }
        }
        Ok(())
    }

    fn with_members(mut self, mut members: Vec<Sequence>) -> Result<Self> {
        members.sort();
        members.dedup();
        let identity = vec![0; self.alphabets.len()];
        if members.first() != Some(&identity) {
            return Err(Error::NotAGroupSystem { a: 0, b: 0 });
        }
        for (i, g) in self.alphabets.iter().enumerate() {
            let mut hit = vec![false; g.order()];
            for m in &members {
                hit[m[i]] = true;
            }
            if let Some(letter) = hit.iter().position(|h| !h) {
                return Err(Error::UnrealizedLetter {
                    time: self.t0 + i as i64,
                    letter,
                });
            }
        }
        self.index = members.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        self.members = members;
        Ok(self)
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Returns the same system under another name.
    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Window `[t0, t1]`.
    pub fn window(&self) -> (i64, i64) {
        (self.t0, self.t1)
    }

    /// Number of time indices in the window.
    pub fn len_window(&self) -> usize {
        self.alphabets.len()
    }

    /// All time indices of the window.
    pub fn times(&self) -> std::ops::RangeInclusive<i64> {
        self.t0..=self.t1
    }

    /// Alphabet group at time `t`.
    pub fn alphabet(&self, t: i64) -> &FiniteGroup {
        &self.alphabets[self.offset(t)]
    }

    /// All alphabets in time order.
    pub fn alphabets(&self) -> &[FiniteGroup] {
        &self.alphabets
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> &[Sequence] {
        &self.members
    }

    /// Member `i`.
    pub fn member(&self, i: usize) -> &Sequence {
        &self.members[i]
    }

    /// Letter of member `i` at time `t`.
    pub fn letter(&self, i: usize, t: i64) -> usize {
        self.members[i][self.offset(t)]
    }

    /// Index of a member sequence.
    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Offset of time `t` within the window.
    pub fn offset(&self, t: i64) -> usize {
        debug_assert!(t >= self.t0 && t <= self.t1, "time {t} outside window");
        (t - self.t0) as usize
    }

    /// Componentwise product of two sequences.
    pub fn multiply(&self, a: &[usize], b: &[usize]) -> Sequence {
        a.iter()
            .zip(b)
            .zip(&self.alphabets)
            .map(|((&x, &y), g)| g.op(x, y))
            .collect()
    }

    /// Componentwise inverse of a sequence.
    pub fn invert(&self, a: &[usize]) -> Sequence {
        a.iter().zip(&self.alphabets).map(|(&x, g)| g.inv(x)).collect()
    }

    /// True when all alphabets are abelian.
    pub fn is_abelian(&self) -> bool {
        self.alphabets.iter().all(|g| g.is_abelian())
    }

    /// True when both systems share window, alphabets and member set.
    pub fn same_members(&self, other: &GroupSystem) -> bool {
        self.window() == other.window()
            && self.alphabets.len() == other.alphabets.len()
            && self
                .alphabets
                .iter()
                .zip(&other.alphabets)
                .all(|(a, b)| a.same_table(b))
            && self.members == other.members
    }

    /// Members whose letters are the identity outside `[a, b]`.
    ///
    /// Bounds outside the window are clamped, and an empty interval gives the
    /// trivial subgroup.
    pub fn span_subgroup(&self, a: i64, b: i64) -> Subgroup {
        let members = (0..self.members.len())
            .filter(|&i| {
                self.members[i]
                    .iter()
                    .enumerate()
                    .all(|(o, &x)| {
                        let t = self.t0 + o as i64;
                        x == 0 || (a <= t && t <= b)
                    })
            })
            .collect();
        Subgroup::from_sorted_unchecked(members)
    }

    /// The projection onto the subwindow `[a, b]`, a group system on that
    /// window.
    pub fn restricted(&self, a: i64, b: i64) -> Result<GroupSystem> {
        if a > b || a < self.t0 || b > self.t1 {
            return Err(Error::OutOfWindow(format!(
                "[{a},{b}] is not a subwindow of [{},{}]",
                self.t0, self.t1
            )));
        }
        let (lo, hi) = (self.offset(a), self.offset(b));
        let shell = Self::shell(&self.name, (a, b), self.alphabets[lo..=hi].to_vec())?;
        shell.with_members(self.members.iter().map(|m| m[lo..=hi].to_vec()).collect())
    }

    /// `X^t` for any integer `t`: members that are the identity before `t`.
    pub(crate) fn x_set(&self, t: i64) -> Subgroup {
        self.span_subgroup(t, self.t1)
    }

    /// `Y^t` for any integer `t`: members that are the identity after `t`.
    pub(crate) fn y_set(&self, t: i64) -> Subgroup {
        self.span_subgroup(self.t0, t)
    }

    /// Controllability index, cached after the first call.
    pub fn ell(&self) -> Result<usize> {
        self.ell
            .get_or_init(|| controllability_index(self).map_err(|_| ()))
            .map_err(|_| Error::NotControllableOnWindow)
    }
}

/// `X^t`: members that are the identity at every time before `t`.
///
/// Defined for `t0 <= t <= t1 + 1`; `X^{t0}` is the whole system.
pub fn x_subgroup(sys: &GroupSystem, t: i64) -> Result<Subgroup> {
    let (t0, t1) = sys.window();
    if t < t0 || t > t1 + 1 {
        return Err(Error::OutOfWindow(format!("X^{t} on window [{t0},{t1}]")));
    }
    Ok(sys.x_set(t))
}

/// `Y^t`: members that are the identity at every time after `t`.
///
/// Defined for `t0 - 1 <= t <= t1`; `Y^{t1}` is the whole system.
pub fn y_subgroup(sys: &GroupSystem, t: i64) -> Result<Subgroup> {
    let (t0, t1) = sys.window();
    if t < t0 - 1 || t > t1 {
        return Err(Error::OutOfWindow(format!("Y^{t} on window [{t0},{t1}]")));
    }
    Ok(sys.y_set(t))
}

fn distinct_projections(sys: &GroupSystem, keep: impl Fn(usize) -> bool) -> usize {
    let set: HashSet<Vec<usize>> = sys
        .members()
        .iter()
        .map(|m| {
            m.iter()
                .enumerate()
                .filter(|(o, _)| keep(*o))
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    set.len()
}

/// True when every past can be joined to every future within `l` steps.
///
/// For each split time `t` in the window the condition is that the projection
/// onto the times before `t` and from `t + l` on is the full product of the
/// two separate projections, which for a group is equivalent to the
/// pairwise joining condition.
pub fn is_l_controllable(sys: &GroupSystem, l: usize) -> bool {
    let n = sys.len_window();
    (1..n).all(|split| {
        let resume = split + l;
        if resume >= n {
            return true;
        }
        let past = distinct_projections(sys, |o| o < split);
        let future = distinct_projections(sys, |o| o >= resume);
        let joint = distinct_projections(sys, |o| o < split || o >= resume);
        joint == past * future
    })
}

/// Exhaustive pairwise form of [`is_l_controllable`]: for every split time and
/// every ordered pair of members, some member agrees with the first before the
/// split and with the second from `l` steps after it.
pub fn is_l_controllable_exhaustive(sys: &GroupSystem, l: usize) -> bool {
    let n = sys.len_window();
    for split in 1..n {
        let resume = split + l;
        if resume >= n {
            continue;
        }
        let joined: HashSet<(Vec<usize>, Vec<usize>)> = sys
            .members()
            .iter()
            .map(|m| (m[..split].to_vec(), m[resume..].to_vec()))
            .collect();
        for a in sys.members() {
            for b in sys.members() {
                if !joined.contains(&(a[..split].to_vec(), b[resume..].to_vec())) {
                    return false;
                }
            }
        }
    }
    true
}

/// Least `l` for which the system is `l`-controllable on its window.
pub fn controllability_index(sys: &GroupSystem) -> Result<usize> {
    (0..=sys.len_window())
        .find(|&l| is_l_controllable(sys, l))
        .ok_or(Error::NotControllableOnWindow)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn trivial() -> GroupSystem {
        let e = FiniteGroup::trivial();
        GroupSystem::from_members("trivial", (0, 1), vec![e.clone(), e], vec![vec![0, 0]]).unwrap()
    }

    pub fn r2() -> GroupSystem {
        let z2 = FiniteGroup::cyclic(2);
        GroupSystem::from_members("R2", (0, 1), vec![z2.clone(), z2], vec![vec![0, 0], vec![1, 1]]).unwrap()
    }

    pub fn c2() -> GroupSystem {
        parse_gsys("system C2\nwindow 0 3\nrule conv Z2 x0 x0+x1\n", &Bounds::default()).unwrap()
    }

    pub fn s3_letters() -> GroupSystem {
        parse_gsys(
            "system S3L\nwindow 0 3\nalphabet 0 Z2\nalphabet 1 S3\nalphabet 2 S3\nalphabet 3 Z2\n\
             seq 1 2 0 0\nseq 0 1 2 0\nseq 0 0 1 1\n",
            &Bounds::default(),
        )
        .unwrap()
    }
}
