//! Paired sequences, filling sequences, normal chains and block codes.
//!
//! Run with `cargo run --example normal_chains`.

use groupsys::chain::{
    block_code_chains, complementary, eigentriangle_expansion, is_sawtooth_partition, normal_chain, oplus_group, purge,
    reconstruct_from_chain, standard_filling, write_chain_report, FillingKind,
};
use groupsys::generator::GeneratorContext;
use groupsys::group::GroupOps;
use groupsys::index::{IndexPair, TriangleKind};
use groupsys::system::parse_gsys;
use groupsys::Bounds;

fn main() -> groupsys::Result<()> {
    let bounds = Bounds::default();
    let sys = parse_gsys(include_str!("../data/c2.gsys"), &bounds)?;
    let ctx = GeneratorContext::from_system(&sys)?;
    let layout = ctx.layout();

    let lower = purge(layout, TriangleKind::Lower, &[IndexPair::new(1, 1), IndexPair::new(0, 1)]);
    let upper = complementary(layout, &lower);
    let show = |pairs: &[IndexPair]| pairs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("lower [{}] complements to upper [{}]", show(&lower.pairs), show(&upper.pairs));
    println!("sawtooth partition: {}", is_sawtooth_partition(layout, &lower, &upper));
    let oplus = oplus_group(&ctx, &upper)?;
    println!("oplus group order {} times kernel order {}", oplus.group.order(), oplus.kernel.order());

    for kind in FillingKind::ALL {
        let chain = normal_chain(&ctx, &standard_filling(layout, kind))?;
        let rebuilt = reconstruct_from_chain(&ctx, &chain)?;
        println!("{kind}: quotient orders {:?}, rebuilt {} members", chain.quotient_orders(), rebuilt.order());
    }
    let chain = normal_chain(&ctx, &standard_filling(layout, FillingKind::TimeRev))?;
    print!("{}", write_chain_report(&chain, &[format!("system {}", sys.name())]));

    let eigen = eigentriangle_expansion(&ctx, 1)?;
    for step in &eigen.steps {
        println!("eigentriangles at {}: {} new, index {}", step.added, step.eigentriangles.len(), step.cosets);
    }

    let parity = parse_gsys(include_str!("../data/parity.gsys"), &bounds)?;
    let code = block_code_chains(&GeneratorContext::from_system(&parity)?, &bounds)?;
    println!("parity code: {} normal orderings, truncated {}", code.chains.len(), code.truncated);
    Ok(())
}
