//! Structural equality of elementary systems up to label renaming.

use super::ElementarySystem;
use crate::error::{Error, Result};
use crate::group::GroupOps;

/// One label bijection per layout position; `maps[i][l]` is the image of
/// label `l` at position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelBijections {
    /// The bijections, in layout order.
    pub maps: Vec<Vec<usize>>,
}

/// Searches for label bijections carrying `a` onto `b`.
///
/// The bijections act positionwise on triangles; at every pair they must map
/// the elements of `a`'s group onto those of `b`'s and respect both products.
/// Since restriction to a subtriangle only forgets positions, such maps also
/// commute with every restriction. Pairs are assigned top row first, so each
/// triangle is checked as soon as its last label map is chosen. Returns
/// `None` when the shapes differ or no bijection exists, and
/// [`Error::BoundExceeded`] once `budget` candidate maps have been tried.
pub fn structurally_equal(a: &ElementarySystem, b: &ElementarySystem, budget: usize) -> Result<Option<LabelBijections>> {
    if a.layout() != b.layout() || a.label_sizes() != b.label_sizes() {
        return Ok(None);
    }
    if a.tables().iter().zip(b.tables()).any(|(x, y)| x.order() != y.order()) {
        return Ok(None);
    }
    let layout = a.layout();
    let mut order: Vec<usize> = (0..layout.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(layout.pairs()[i].k), layout.pairs()[i].t));
    let mut search = Search {
        a,
        b,
        order,
        maps: vec![Vec::new(); layout.len()],
        budget,
        spent: 0,
    };
    if search.assign(0)? {
        Ok(Some(LabelBijections { maps: search.maps }))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    a: &'a ElementarySystem,
    b: &'a ElementarySystem,
    order: Vec<usize>,
    maps: Vec<Vec<usize>>,
    budget: usize,
    spent: usize,
}

impl Search<'_> {
    fn assign(&mut self, depth: usize) -> Result<bool> {
        let Some(&pos) = self.order.get(depth) else {
            return Ok(true);
        };
        let n = self.a.label_sizes()[pos];
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::BoundExceeded {
                    what: "structural equality search".into(),
                    limit: self.budget,
                });
            }
            self.maps[pos] = perm.clone();
            if self.triangle_matches(pos) && self.assign(depth + 1)? {
                return Ok(true);
            }
            if !next_permutation(&mut perm[1..]) {
                break;
            }
        }
        self.maps[pos].clear();
        Ok(false)
    }

    fn triangle_matches(&self, pos: usize) -> bool {
        let layout = self.a.layout();
        let (ta, tb) = (&self.a.tables()[pos], &self.b.tables()[pos]);
        let idx: Vec<usize> = ta.positions.iter().map(|&p| layout.position(p).expect("clipped")).collect();
        let mut image = Vec::with_capacity(ta.order());
        for e in &ta.elements {
            let mapped: Vec<usize> = e.iter().zip(&idx).map(|(&l, &i)| self.maps[i][l]).collect();
            match tb.element_index(&mapped) {
                Some(j) => image.push(j),
                None => return false,
            }
        }
        let n = ta.order();
        (0..n).all(|x| (0..n).all(|y| image[ta.group.op(x, y)] == tb.group.op(image[x], image[y])))
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::super::tests::extracted;
    use super::*;
    use crate::generator::fixtures::*;

    #[test]
    fn permutations_are_enumerated_in_order() {
        let mut v = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(v, vec![2, 1, 0]);
    }

    #[test]
    fn systems_equal_themselves() {
        for sys in [trivial(), r2(), c2(), s3_letters()] {
            let (_, es) = extracted(&sys);
            let maps = structurally_equal(&es, &es, 1_000_000).unwrap().unwrap();
            assert!(maps.maps.iter().all(|m| m.iter().enumerate().all(|(i, &j)| i == j)));
        }
    }

    #[test]
    fn different_systems_are_not_equal() {
        let (_, a) = extracted(&r2());
        let (_, b) = extracted(&c2());
        assert!(structurally_equal(&a, &b, 1_000_000).unwrap().is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let (_, es) = extracted(&s3_letters());
        assert!(matches!(structurally_equal(&es, &es, 2), Err(Error::BoundExceeded { .. })));
    }
}
