//! Acceptance suite: one PASS or FAIL line per criterion.
//!
//! Every check is exhaustive on its small instance. Values that follow from
//! a construction are compared against oracles computed here from first
//! principles rather than through the library.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use groupsys::chain::{
    block_code_chains, complementary, is_sawtooth_partition, normal_chain, purge, reconstruct_from_chain,
    standard_filling, FillingKind,
};
use groupsys::elementary::{
    construct_elementary_system, extract_elementary_system, global_group_system, recover_original,
    structurally_equal, ConstructionStrategy,
};
use groupsys::generator::{circ, elementary_group, nested_hom, recover_system_fhgs, triangle, GeneratorContext};
use groupsys::group::{FiniteGroup, GroupOps};
use groupsys::index::{IndexLayout, IndexPair, TriangleKind};
use groupsys::system::{
    controllability_index, decode_to_tensor, encode_spectral_domain, encode_time_domain, extract_basis, is_complete,
    is_l_controllable_exhaustive, parse_gsys, spectral_granule, time_granule, zassenhaus_map, GroupSystem,
};
use groupsys::Bounds;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn load(text: &str) -> GroupSystem {
    parse_gsys(text, &Bounds::default()).expect("bundled system parses")
}

fn trivial() -> GroupSystem {
    load(include_str!("../data/trivial.gsys"))
}

fn r2() -> GroupSystem {
    load(include_str!("../data/r2.gsys"))
}

fn c2() -> GroupSystem {
    load(include_str!("../data/c2.gsys"))
}

fn s3_letters() -> GroupSystem {
    load(include_str!("../data/s3_letter.gsys"))
}

fn parity() -> GroupSystem {
    load(include_str!("../data/parity.gsys"))
}

fn context(sys: &GroupSystem) -> Result<GeneratorContext, String> {
    GeneratorContext::from_system(sys).map_err(|e| format!("{}: {e}", sys.name()))
}

fn member_set(sys: &GroupSystem) -> BTreeSet<Vec<usize>> {
    sys.members().iter().cloned().collect()
}

/// Least `l` such that any past joins any future after `l` free steps,
/// found by a direct existence search over member triples.
fn ell_oracle(sys: &GroupSystem) -> usize {
    let n = sys.len_window();
    let members = sys.members();
    (0..=n)
        .find(|&l| {
            (1..n).all(|split| {
                let resume = split + l;
                resume >= n
                    || members.iter().all(|a| {
                        members.iter().all(|b| {
                            members
                                .iter()
                                .any(|c| c[..split] == a[..split] && c[resume..] == b[resume..])
                        })
                    })
            })
        })
        .expect("a finite window is always controllable within its length")
}

/// Closure of the listed sequences under the letterwise product.
fn closure_oracle(sys: &GroupSystem, seeds: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mul = |a: &[usize], b: &[usize]| -> Vec<usize> {
        sys.alphabets().iter().zip(a.iter().zip(b)).map(|(g, (&x, &y))| g.op(x, y)).collect()
    };
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![vec![0; sys.len_window()]];
    while let Some(x) = frontier.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for s in seeds {
            frontier.push(mul(&x, s));
        }
    }
    seen
}

/// Index of the subgroup of span-supported members below the product of the
/// two shorter spans, counted directly on member sequences.
fn spectral_order_oracle(sys: &GroupSystem, i: i64, m: i64) -> usize {
    let (t0, _) = sys.window();
    let supported = |a: i64, b: i64| -> Vec<&Vec<usize>> {
        sys.members()
            .iter()
            .filter(|s| s.iter().enumerate().all(|(o, &x)| x == 0 || (a <= o as i64 + t0 && o as i64 + t0 <= b)))
            .collect()
    };
    let num = supported(i, i + m).len();
    let left = supported(i, i + m - 1);
    let right = supported(i + 1, i + m);
    let den: HashSet<Vec<usize>> = left.iter().flat_map(|a| right.iter().map(|b| sys.multiply(a, b))).collect();
    num / den.len()
}

fn criterion_1() -> Check {
    for (sys, expected_order, expected_ell) in [(trivial(), 1, 0), (r2(), 2, 1), (c2(), 16, 1)] {
        let name = sys.name().to_string();
        ensure!(sys.order() == expected_order, "{name}: {} members, expected {expected_order}", sys.order());
        let oracle = ell_oracle(&sys);
        let ell = controllability_index(&sys).map_err(|e| e.to_string())?;
        ensure!(oracle == expected_ell, "{name}: oracle gives ell {oracle}, expected {expected_ell}");
        ensure!(ell == expected_ell, "{name}: library gives ell {ell}, expected {expected_ell}");
        ensure!(is_l_controllable_exhaustive(&sys, ell), "{name}: exhaustive check rejects ell {ell}");
        ensure!(ell == 0 || !is_l_controllable_exhaustive(&sys, ell - 1), "{name}: ell {ell} is not least");
    }
    Ok(())
}

fn criterion_2() -> Check {
    for sys in [r2(), c2()] {
        let basis = extract_basis(&sys).map_err(|e| e.to_string())?;
        let mut images = BTreeSet::new();
        for r in basis.all_tensors() {
            let a = encode_time_domain(&basis, &r).map_err(|e| e.to_string())?;
            ensure!(sys.index_of(&a).is_some(), "{}: encoding {a:?} is not a member", sys.name());
            ensure!(decode_to_tensor(&basis, &a).map_err(|e| e.to_string())? == r, "{}: decode fails", sys.name());
            images.insert(a);
        }
        ensure!(basis.tensor_count() == images.len(), "{}: encoder is not injective", sys.name());
        ensure!(images == member_set(&sys), "{}: encoder is not onto", sys.name());
    }
    Ok(())
}

fn criterion_3() -> Check {
    for sys in [r2(), c2(), s3_letters()] {
        let name = sys.name().to_string();
        let ell = ell_oracle(&sys) as i64;
        let (_, t1) = sys.window();
        for i in sys.times() {
            for m in -2..=(t1 - i) {
                let lambda = time_granule(&sys, i, m).map_err(|e| e.to_string())?;
                if m < 0 || m > ell {
                    ensure!(lambda.is_trivial(), "{name}: time granule ({i},{m}) has order {}", lambda.order());
                    continue;
                }
                let gamma = spectral_granule(&sys, i, m).map_err(|e| e.to_string())?;
                let oracle = spectral_order_oracle(&sys, i, m);
                ensure!(gamma.order() == oracle, "{name}: spectral granule ({i},{m}) order {} vs {oracle}", gamma.order());
                ensure!(lambda.order() == gamma.order(), "{name}: granule orders differ at ({i},{m})");
                let z = zassenhaus_map(&sys, i, m).map_err(|e| format!("{name} ({i},{m}): {e}"))?;
                ensure!(
                    z.induced.is_injective() && z.induced.is_surjective(),
                    "{name}: Zassenhaus map at ({i},{m}) is not an isomorphism"
                );
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for sys in [r2(), c2()] {
        let ctx = context(&sys)?;
        for &p in ctx.layout().pairs() {
            let table = elementary_group(&ctx, p.k, p.t).map_err(|e| e.to_string())?;
            let tri = |i: usize| triangle(&ctx, ctx.tensor(i), p.k, p.t).map(|t| t.labels).map_err(|e| e.to_string());
            let mut products: HashMap<(Vec<usize>, Vec<usize>), Vec<usize>> = HashMap::new();
            for a in 0..ctx.tensors().len() {
                for b in 0..ctx.tensors().len() {
                    let prod = circ(&ctx, ctx.tensor(a), ctx.tensor(b)).map_err(|e| e.to_string())?;
                    let image = triangle(&ctx, &prod, p.k, p.t).map_err(|e| e.to_string())?.labels;
                    let key = (tri(a)?, tri(b)?);
                    if let Some(prev) = products.get(&key) {
                        ensure!(*prev == image, "{}: product at {p} depends on the lift", sys.name());
                    }
                    let (x, y) = (table.element_index(&key.0), table.element_index(&key.1));
                    let (Some(x), Some(y)) = (x, y) else {
                        return Err(format!("{}: triangle missing from the table at {p}", sys.name()));
                    };
                    ensure!(table.elements[table.multiply(x, y)] == image, "{}: table product wrong at {p}", sys.name());
                    products.insert(key, image);
                }
            }
            ensure!(products.len() == table.order() * table.order(), "{}: not every triangle pair lifted at {p}", sys.name());
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    for sys in [r2(), c2()] {
        let ctx = context(&sys)?;
        let pairs = ctx.layout().pairs().to_vec();
        let mut checked = 0;
        for &source in &pairs {
            for j in 0..=ctx.ell() - source.k {
                for &target in pairs.iter().filter(|q| q.k == source.k + j) {
                    let nested = target.t <= source.t && target.t + target.k as i64 >= source.t + source.k as i64;
                    if !nested {
                        continue;
                    }
                    let h = nested_hom(&ctx, source, target).map_err(|e| format!("{source}->{target}: {e}"))?;
                    for u in ctx.tensors() {
                        let s = triangle(&ctx, u, source.k, source.t).map_err(|e| e.to_string())?.labels;
                        let t = triangle(&ctx, u, target.k, target.t).map_err(|e| e.to_string())?.labels;
                        let (Some(x), Some(y)) = (h.source.element_index(&s), h.target.element_index(&t)) else {
                            return Err(format!("{}: unrealized triangle at {source} or {target}", sys.name()));
                        };
                        ensure!(h.hom.apply(x) == y, "{}: projection {source}->{target} disagrees", sys.name());
                    }
                    checked += 1;
                }
            }
        }
        ensure!(checked > pairs.len(), "{}: only {checked} nested pairs checked", sys.name());
    }
    Ok(())
}

fn criterion_6() -> Check {
    let s3l = s3_letters();
    let seeds = vec![vec![1, 2, 0, 0], vec![0, 1, 2, 0], vec![0, 0, 1, 1]];
    let saturated = closure_oracle(&s3l, &seeds);
    ensure!(saturated == member_set(&s3l), "S3L: saturation oracle gives {} members", saturated.len());
    ensure!(s3l.alphabets().iter().any(|g| !g.is_abelian()), "S3L has no nonabelian letter group");
    for sys in [r2(), c2(), s3l] {
        let ctx = context(&sys)?;
        let back = recover_system_fhgs(&ctx).map_err(|e| e.to_string())?;
        ensure!(member_set(&back) == member_set(&sys), "{}: recovered member set differs", sys.name());
    }
    Ok(())
}

fn criterion_7() -> Check {
    let c2 = c2();
    let basis = extract_basis(&c2).map_err(|e| e.to_string())?;
    for r in basis.all_tensors() {
        let a = encode_time_domain(&basis, &r).map_err(|e| e.to_string())?;
        let b = encode_spectral_domain(&basis, &r).map_err(|e| e.to_string())?;
        ensure!(a == b, "C2: encoders disagree on {:?}", r.choice);
    }
    let s3l = s3_letters();
    let basis = extract_basis(&s3l).map_err(|e| e.to_string())?;
    let mut disagreements = 0;
    for r in basis.all_tensors() {
        if encode_time_domain(&basis, &r).map_err(|e| e.to_string())?
            != encode_spectral_domain(&basis, &r).map_err(|e| e.to_string())?
        {
            disagreements += 1;
        }
    }
    println!("  note: S3L encoders disagree on {disagreements} of {} tensors", basis.tensor_count());
    Ok(())
}

fn spans_in(layout: &IndexLayout) -> Vec<(i64, i64)> {
    let (t0, t1) = layout.window();
    let mut out = Vec::new();
    for t in t0..=t1 {
        for k in 0..=layout.ell() as i64 {
            if t + k <= t1 {
                out.push((t, t + k));
            }
        }
    }
    out
}

fn criterion_8() -> Check {
    let layout = IndexLayout::new(2, 0, 5);
    let all = spans_in(&layout);
    let span = |p: &IndexPair| (p.t, p.t + p.k as i64);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a77_7007);
    for trial in 0..50 {
        let count = rng.gen_range(1..=5);
        let picks: Vec<IndexPair> = layout.pairs().choose_multiple(&mut rng, count).copied().collect();
        let lower = purge(&layout, TriangleKind::Lower, &picks);
        let upper = complementary(&layout, &lower);
        let inside: BTreeSet<(i64, i64)> = all
            .iter()
            .copied()
            .filter(|&(a, b)| lower.pairs.iter().map(span).any(|(x, y)| x <= a && b <= y))
            .collect();
        let outside: BTreeSet<(i64, i64)> = all
            .iter()
            .copied()
            .filter(|&(a, b)| upper.pairs.iter().map(span).any(|(x, y)| a <= x && y <= b))
            .collect();
        ensure!(inside.is_disjoint(&outside), "trial {trial}: triangles overlap for {:?}", lower.pairs);
        ensure!(inside.len() + outside.len() == all.len(), "trial {trial}: triangles miss pairs for {:?}", lower.pairs);
        ensure!(is_sawtooth_partition(&layout, &lower, &upper), "trial {trial}: library rejects the partition");
    }
    Ok(())
}

fn criterion_9() -> Check {
    for sys in [r2(), c2()] {
        let ctx = context(&sys)?;
        let g = ctx.generator_group();
        for kind in FillingKind::ALL {
            let chain = normal_chain(&ctx, &standard_filling(ctx.layout(), kind)).map_err(|e| format!("{kind}: {e}"))?;
            let product: usize = chain.quotient_orders().iter().product();
            ensure!(product == sys.order(), "{} {kind}: quotient orders multiply to {product}", sys.name());
            for step in &chain.steps {
                let h = step.subgroup.members();
                let normal = (0..g.order()).all(|x| h.iter().all(|&y| step.subgroup.contains(g.op(g.op(x, y), g.inv(x)))));
                ensure!(normal, "{} {kind}: subgroup after {} is not normal", sys.name(), step.added);
            }
            let rebuilt = reconstruct_from_chain(&ctx, &chain).map_err(|e| e.to_string())?;
            ensure!(member_set(&rebuilt) == member_set(&sys), "{} {kind}: reconstruction differs", sys.name());
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    let bounds = Bounds::default();
    for sys in [r2(), c2(), s3_letters()] {
        let ctx = context(&sys)?;
        let es = extract_elementary_system(&ctx).map_err(|e| e.to_string())?;
        let back = recover_original(&es, &ctx, &bounds).map_err(|e| format!("{}: {e}", sys.name()))?;
        ensure!(member_set(&back) == member_set(&sys), "{}: recovered system differs", sys.name());
        let global = global_group_system(&es, &bounds).map_err(|e| e.to_string())?;
        ensure!(global.order() == sys.order(), "{}: global group has order {}", sys.name(), global.order());
    }
    let z2 = FiniteGroup::cyclic(2);
    let window = (0, 3);
    let top_pairs = 3;
    let row_pairs = 4;
    for (label, strategy, kernel_order) in [
        ("trivial kernel", ConstructionStrategy::default(), 1usize),
        ("kernel Z2", ConstructionStrategy::default().with_row(0, z2.clone(), 0), 2),
    ] {
        let es = construct_elementary_system("built", 1, window, std::slice::from_ref(&z2), &strategy, &bounds)
            .map_err(|e| format!("{label}: {e}"))?;
        let sys = global_group_system(&es, &bounds).map_err(|e| format!("{label}: {e}"))?;
        let expected = 2usize.pow(top_pairs) * kernel_order.pow(row_pairs);
        ensure!(sys.order() == expected, "{label}: {} members, expected {expected}", sys.order());
        let ell = ell_oracle(&sys);
        ensure!(ell == 1, "{label}: controllability index {ell}");
        let basis = extract_basis(&sys).map_err(|e| e.to_string())?;
        ensure!(is_complete(&basis).map_err(|e| e.to_string())?, "{label}: system is not complete");
        let again = extract_elementary_system(&context(&sys)?).map_err(|e| e.to_string())?;
        let equal = structurally_equal(&es, &again, 10_000_000).map_err(|e| e.to_string())?;
        ensure!(equal.is_some(), "{label}: re-extracted system is not structurally equal");
    }
    Ok(())
}

fn criterion_11() -> Check {
    let code = parity();
    let even: BTreeSet<Vec<usize>> = (0..8usize)
        .map(|w| (0..3).map(|b| (w >> (2 - b)) & 1).collect::<Vec<usize>>())
        .filter(|w| w.iter().sum::<usize>() % 2 == 0)
        .collect();
    ensure!(member_set(&code) == even, "parity system is not the even-weight code");
    let ctx = context(&code)?;
    let chains = block_code_chains(&ctx, &Bounds::default()).map_err(|e| e.to_string())?;
    ensure!(!chains.truncated, "fill orderings were truncated");
    ensure!(!chains.chains.is_empty(), "no normal fill ordering found");
    for (order, chain) in &chains.chains {
        let product: usize = chain.quotient_orders().iter().product();
        ensure!(product == even.len(), "ordering {order:?}: quotient orders multiply to {product}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("group-system validity and controllability index", criterion_1),
        ("time-domain encoder is a bijection", criterion_2),
        ("granule case analysis", criterion_3),
        ("elementary groups are well defined", criterion_4),
        ("nested projections are homomorphisms", criterion_5),
        ("recovery through per-time homomorphisms", criterion_6),
        ("encoder agreement", criterion_7),
        ("sawtooth partitions", criterion_8),
        ("normal chains from standard fillings", criterion_9),
        ("elementary-system round trip and construction", criterion_10),
        ("block-code chains", criterion_11),
    ];
    let mut failed = 0;
    for (n, (title, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS {:>2} {title}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {why}", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
