//! Isomorphism search between small groups.

use super::{generating_set, FiniteGroup, GroupOps, Subgroup};

/// Searches for an isomorphism `g → h`, returned as the image of each element.
///
/// Images of a generating set of `g` are chosen among elements of `h` with the
/// same element order; each choice is extended along products and checked.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.is_abelian() != h.is_abelian() {
        return None;
    }
    let g_orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    let h_orders: Vec<usize> = (0..h.order()).map(|a| h.element_order(a)).collect();
    let gens = generating_set(g, &Subgroup::whole(g));
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| h_orders[y] == g_orders[x]).collect())
        .collect();
    search(g, h, &gens, &candidates, &mut Vec::new())
}

/// True when the two groups are isomorphic.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == gens.len() {
        return extend(g, h, gens, chosen);
    }
    for &c in &candidates[chosen.len()] {
        chosen.push(c);
        if let Some(found) = search(g, h, gens, candidates, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Extends generator images to a bijective homomorphism `g → h`, if they define one.
pub(crate) fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for (&s, &img) in gens.iter().zip(images) {
            let y = g.op(x, s);
            let fy = h.op(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                frontier.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &y in &map {
        if y == usize::MAX || hit[y] {
            return None;
        }
        hit[y] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if map[g.op(a, b)] != h.op(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}
