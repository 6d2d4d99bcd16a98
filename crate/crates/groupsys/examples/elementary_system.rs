//! Elementary systems: extraction, assembly, recovery and construction.
//!
//! Run with `cargo run --example elementary_system`.

use groupsys::elementary::{
    construct_elementary_system, depth_restrict, extract_elementary_system, global_group_system, recover_original,
    structurally_equal, write_esys, ConstructionStrategy,
};
use groupsys::generator::GeneratorContext;
use groupsys::group::{FiniteGroup, GroupOps};
use groupsys::system::{controllability_index, parse_gsys};
use groupsys::Bounds;

fn main() -> groupsys::Result<()> {
    let bounds = Bounds::default();
    let sys = parse_gsys(include_str!("../data/s3_letter.gsys"), &bounds)?;
    let ctx = GeneratorContext::from_system(&sys)?;
    let es = extract_elementary_system(&ctx)?;
    let back = recover_original(&es, &ctx, &bounds)?;
    println!("{}: recovered {} of {} members", sys.name(), back.order(), sys.order());
    let global = global_group_system(&es, &bounds)?;
    println!("global group system: {} members, ell {}", global.order(), controllability_index(&global)?);
    println!("top row alone has depth {}", depth_restrict(&es, 1)?.depth());

    let strategy = ConstructionStrategy::default().with_row(0, FiniteGroup::cyclic(2), 0);
    let built = construct_elementary_system("built", 1, (0, 3), &[FiniteGroup::cyclic(2)], &strategy, &bounds)?;
    let built_sys = global_group_system(&built, &bounds)?;
    println!("constructed system: {} members, ell {}", built_sys.order(), controllability_index(&built_sys)?);
    let again = extract_elementary_system(&GeneratorContext::from_system(&built_sys)?)?;
    println!("re-extracted system is structurally equal: {}", structurally_equal(&built, &again, 1_000_000)?.is_some());
    print!("{}", write_esys(&depth_restrict(&built, 1)?));
    Ok(())
}
