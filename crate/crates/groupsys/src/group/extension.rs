//! Enumeration of group extensions of a quotient `Q` by a kernel `K`.
//!
//! An extension is realized on the set `Q × K`, the pair `(q, x)` being element
//! `q·|K| + x`, with product
//! `(a, x)(b, y) = (ab, x · φ_a(y) · f(a, b))`
//! for an action `φ: Q → Aut(K)` and a normalized factor set `f`. For abelian
//! `K` every action is paired with one factor set per cohomology class, which
//! makes the list complete up to equivalence of extensions. For nonabelian `K`
//! only semidirect products are produced.

use std::collections::HashSet;

use super::iso::extend;
use super::{find_isomorphism, generating_set, FiniteGroup, GroupOps, Homomorphism, Subgroup};
use crate::error::{Error, Result};

const NODE_BUDGET: usize = 5_000_000;

/// One extension `1 → K → E → Q → 1`.
#[derive(Debug, Clone)]
pub struct Extension {
    /// The extension group on `Q × K`.
    pub group: FiniteGroup,
    /// Surjection onto `Q`, `(q, x) ↦ q`.
    pub projection: Homomorphism,
    /// Image of each kernel element, `x ↦ (e, x)`.
    pub kernel_embedding: Vec<usize>,
    /// The action of each element of `Q` on `K`, as image lists.
    pub action: Vec<Vec<usize>>,
    /// Factor set `f(a, b)` stored at `a·|Q| + b`.
    pub factor_set: Vec<usize>,
    /// True when the factor set is cohomologous to zero.
    pub split: bool,
}

/// The extensions found for a pair `(Q, K)`.
#[derive(Debug, Clone)]
pub struct ExtensionList {
    /// Extensions, the direct product first.
    pub extensions: Vec<Extension>,
    /// True when the search covered every equivalence class of extensions.
    pub complete: bool,
}

/// All automorphisms of `k`, as image lists, identity first.
pub fn automorphisms(k: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = generating_set(k, &Subgroup::whole(k));
    let orders: Vec<usize> = (0..k.order()).map(|a| k.element_order(a)).collect();
    let mut out = Vec::new();
    let mut images = Vec::new();
    collect_automorphisms(k, &gens, &orders, &mut images, &mut out);
    out.sort();
    out
}

fn collect_automorphisms(
    k: &FiniteGroup,
    gens: &[usize],
    orders: &[usize],
    images: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if images.len() == gens.len() {
        if let Some(map) = extend(k, k, gens, images) {
            out.push(map);
        }
        return;
    }
    let want = orders[gens[images.len()]];
    for y in 0..k.order() {
        if orders[y] == want {
            images.push(y);
            collect_automorphisms(k, gens, orders, images, out);
            images.pop();
        }
    }
}

/// Homomorphisms `q → Aut(k)`, each given as one automorphism per element of `q`.
fn actions(q: &FiniteGroup, auts: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let gens = generating_set(q, &Subgroup::whole(q));
    let mut out = Vec::new();
    let mut choice = Vec::new();
    collect_actions(q, auts, &gens, &mut choice, &mut out);
    out
}

fn collect_actions(
    q: &FiniteGroup,
    auts: &[Vec<usize>],
    gens: &[usize],
    choice: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if choice.len() == gens.len() {
        let mut phi: Vec<Option<Vec<usize>>> = vec![None; q.order()];
        phi[0] = Some((0..auts[0].len()).collect());
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for (&s, &c) in gens.iter().zip(choice.iter()) {
                let y = q.op(x, s);
                let px = phi[x].as_ref().expect("assigned");
                let composed: Vec<usize> = (0..px.len()).map(|i| px[auts[c][i]]).collect();
                match &phi[y] {
                    None => {
                        phi[y] = Some(composed);
                        frontier.push(y);
                    }
                    Some(existing) if *existing != composed => return,
                    Some(_) => {}
                }
            }
        }
        out.push(phi.into_iter().map(|p| p.expect("generated")).collect());
        return;
    }
    for c in 0..auts.len() {
        choice.push(c);
        collect_actions(q, auts, gens, choice, out);
        choice.pop();
    }
}

/// Enumerates extensions of `q` by `k` of order at most `max_order`.
pub fn enumerate_extensions(q: &FiniteGroup, k: &FiniteGroup, max_order: usize) -> Result<ExtensionList> {
    let order = q.order() * k.order();
    if order > max_order {
        return Err(Error::BoundExceeded {
            what: format!("extension order {order}"),
            limit: max_order,
        });
    }
    let auts = automorphisms(k);
    let mut extensions = Vec::new();
    for action in actions(q, &auts) {
        let factor_sets = if k.is_abelian() {
            cohomology_representatives(q, k, &action)?
        } else {
            vec![vec![0; q.order() * q.order()]]
        };
        for (class, f) in factor_sets.into_iter().enumerate() {
            extensions.push(build_extension(q, k, &action, f, class == 0)?);
        }
    }
    Ok(ExtensionList {
        extensions,
        complete: k.is_abelian(),
    })
}

fn build_extension(
    q: &FiniteGroup,
    k: &FiniteGroup,
    action: &[Vec<usize>],
    factor_set: Vec<usize>,
    split: bool,
) -> Result<Extension> {
    let (nq, nk) = (q.order(), k.order());
    let n = nq * nk;
    let mut table = Vec::with_capacity(n * n);
    for e1 in 0..n {
        let (a, x) = (e1 / nk, e1 % nk);
        for e2 in 0..n {
            let (b, y) = (e2 / nk, e2 % nk);
            let z = k.op(k.op(x, action[a][y]), factor_set[a * nq + b]);
            table.push(q.op(a, b) * nk + z);
        }
    }
    let name = format!("ext({},{})", q.name(), k.name());
    let group = FiniteGroup::from_flat(&name, n, table)?;
    let projection = Homomorphism::new(&group, q, (0..n).map(|e| e / nk).collect())?;
    if let Some(missing) = projection.missing_from_image() {
        return Err(Error::NotSurjective { missing });
    }
    let kernel = projection.kernel();
    let kernel_group = kernel.to_group(&group, "kernel")?;
    if find_isomorphism(&kernel_group, k).is_none() {
        return Err(Error::InvariantViolation("extension kernel is not isomorphic to K".into()));
    }
    Ok(Extension {
        group,
        projection,
        kernel_embedding: (0..nk).collect(),
        action: action.to_vec(),
        factor_set,
        split,
    })
}

/// One normalized factor set per cohomology class, the zero class first.
fn cohomology_representatives(q: &FiniteGroup, k: &FiniteGroup, action: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let cocycles = normalized_cocycles(q, k, action)?;
    let coboundaries = coboundaries(q, k, action)?;
    let nq = q.order();
    let mut covered: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::new();
    for f in cocycles {
        if covered.contains(&f) {
            continue;
        }
        for b in &coboundaries {
            let shifted: Vec<usize> = (0..nq * nq).map(|i| k.op(f[i], b[i])).collect();
            covered.insert(shifted);
        }
        reps.push(f);
    }
    Ok(reps)
}

fn coboundaries(q: &FiniteGroup, k: &FiniteGroup, action: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let (nq, nk) = (q.order(), k.order());
    let count = (nk as u128).checked_pow((nq - 1) as u32).unwrap_or(u128::MAX);
    if count > NODE_BUDGET as u128 {
        return Err(Error::BoundExceeded {
            what: "coboundary enumeration".into(),
            limit: NODE_BUDGET,
        });
    }
    let mut out = HashSet::new();
    for code in 0..count as usize {
        let mut g = vec![0; nq];
        let mut c = code;
        for slot in g.iter_mut().skip(1) {
            *slot = c % nk;
            c /= nk;
        }
        let mut f = vec![0; nq * nq];
        for a in 0..nq {
            for b in 0..nq {
                let ab = q.op(a, b);
                f[a * nq + b] = k.op(k.op(action[a][g[b]], k.inv(g[ab])), g[a]);
            }
        }
        out.insert(f);
    }
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort();
    Ok(v)
}

/// All normalized factor sets satisfying the cocycle identity, in lexicographic order.
fn normalized_cocycles(q: &FiniteGroup, k: &FiniteGroup, action: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let nq = q.order();
    let var = |a: usize, b: usize| -> Option<usize> {
        (a != 0 && b != 0).then(|| (a - 1) * (nq - 1) + (b - 1))
    };
    let nvars = (nq - 1) * (nq - 1);
    // Each identity f(a,b)·f(ab,c) = φ_a(f(b,c))·f(a,bc) is checked once all its
    // variables are assigned.
    let mut checks: Vec<Vec<[usize; 3]>> = vec![Vec::new(); nvars];
    for a in 1..nq {
        for b in 1..nq {
            for c in 1..nq {
                let vars = [var(a, b), var(q.op(a, b), c), var(b, c), var(a, q.op(b, c))];
                if let Some(last) = vars.iter().flatten().max() {
                    checks[*last].push([a, b, c]);
                }
            }
        }
    }
    let mut values = vec![0usize; nvars];
    let mut out = Vec::new();
    let mut nodes = 0usize;
    let get = |values: &[usize], a: usize, b: usize| var(a, b).map_or(0, |v| values[v]);
    fn recurse(
        depth: usize,
        values: &mut Vec<usize>,
        nodes: &mut usize,
        out: &mut Vec<Vec<usize>>,
        ctx: &dyn Fn(&[usize], usize) -> bool,
        nk: usize,
    ) -> Result<()> {
        if depth == values.len() {
            out.push(values.clone());
            return Ok(());
        }
        for x in 0..nk {
            *nodes += 1;
            if *nodes > NODE_BUDGET {
                return Err(Error::BoundExceeded {
                    what: "factor set search".into(),
                    limit: NODE_BUDGET,
                });
            }
            values[depth] = x;
            if ctx(values, depth) {
                recurse(depth + 1, values, nodes, out, ctx, nk)?;
            }
        }
        values[depth] = 0;
        Ok(())
    }
    let consistent = |values: &[usize], depth: usize| -> bool {
        checks[depth].iter().all(|&[a, b, c]| {
            let lhs = k.op(get(values, a, b), get(values, q.op(a, b), c));
            let rhs = k.op(action[a][get(values, b, c)], get(values, a, q.op(b, c)));
            lhs == rhs
        })
    };
    if nvars == 0 {
        out.push(Vec::new());
    } else {
        recurse(0, &mut values, &mut nodes, &mut out, &consistent, k.order())?;
    }
    Ok(out
        .into_iter()
        .map(|vals| {
            let mut f = vec![0; nq * nq];
            for a in 1..nq {
                for b in 1..nq {
                    f[a * nq + b] = vals[(a - 1) * (nq - 1) + (b - 1)];
                }
            }
            f
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, is_isomorphic};

    #[test]
    fn trivial_quotient_gives_kernel() {
        let k = FiniteGroup::cyclic(3);
        let list = enumerate_extensions(&FiniteGroup::trivial(), &k, 64).unwrap();
        assert_eq!(list.extensions.len(), 1);
        assert!(is_isomorphic(&list.extensions[0].group, &k));
    }

    #[test]
    fn z2_by_z2_gives_klein_and_z4() {
        let z2 = FiniteGroup::cyclic(2);
        let list = enumerate_extensions(&z2, &z2, 64).unwrap();
        assert!(list.complete);
        let v4 = direct_product(&z2, &z2).group;
        assert!(list.extensions.iter().any(|e| is_isomorphic(&e.group, &v4)));
        assert!(list.extensions.iter().any(|e| is_isomorphic(&e.group, &FiniteGroup::cyclic(4))));
        assert!(list.extensions[0].split);
        assert!(list.extensions[0].group.same_table(&v4));
    }

    #[test]
    fn z2_by_z3_gives_z6_and_s3() {
        let list = enumerate_extensions(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3), 64).unwrap();
        assert!(list.extensions.iter().any(|e| is_isomorphic(&e.group, &FiniteGroup::cyclic(6))));
        assert!(list.extensions.iter().any(|e| is_isomorphic(&e.group, &FiniteGroup::symmetric3())));
    }

    #[test]
    fn every_extension_projects_with_kernel_k() {
        let q = FiniteGroup::builtin("V4").unwrap();
        let k = FiniteGroup::cyclic(2);
        let list = enumerate_extensions(&q, &k, 64).unwrap();
        for e in &list.extensions {
            assert!(e.projection.is_surjective());
            assert_eq!(e.projection.kernel().order(), 2);
        }
        // Extensions of V4 by a central Z2 include Z2^3, Z4xZ2, D4 and Q8.
        let orders: HashSet<Vec<usize>> = list
            .extensions
            .iter()
            .map(|e| {
                let mut o: Vec<usize> = (0..8).map(|a| e.group.element_order(a)).collect();
                o.sort();
                o
            })
            .collect();
        assert!(orders.len() >= 4);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&FiniteGroup::cyclic(2)).len(), 1);
        assert_eq!(automorphisms(&FiniteGroup::cyclic(5)).len(), 4);
        assert_eq!(automorphisms(&FiniteGroup::builtin("V4").unwrap()).len(), 6);
        assert_eq!(automorphisms(&FiniteGroup::symmetric3()).len(), 6);
    }

    #[test]
    fn bound_is_enforced() {
        let z8 = FiniteGroup::cyclic(8);
        assert!(matches!(
            enumerate_extensions(&z8, &z8, 32),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn nonabelian_kernel_is_flagged_incomplete() {
        let list = enumerate_extensions(&FiniteGroup::cyclic(2), &FiniteGroup::symmetric3(), 64).unwrap();
        assert!(!list.complete);
        assert!(!list.extensions.is_empty());
    }
}
