//! The generator group, elementary groups and recovery of the system.
//!
//! Run with `cargo run --example generator_group`.

use groupsys::generator::{
    circ, elementary_group, lower_elementary_group, nested_hom, recover_system_fhgs, theta_t, write_egrp,
    GeneratorContext,
};
use groupsys::group::GroupOps;
use groupsys::index::IndexPair;
use groupsys::system::parse_gsys;
use groupsys::Bounds;

fn main() -> groupsys::Result<()> {
    let sys = parse_gsys(include_str!("../data/c2.gsys"), &Bounds::default())?;
    let ctx = GeneratorContext::from_system(&sys)?;
    println!("generator group of {} has order {}", sys.name(), ctx.order());

    let (u, w) = (ctx.tensor(3), ctx.tensor(9));
    println!("{:?} o {:?} = {:?}", u.labels, w.labels, circ(&ctx, u, w)?.labels);

    for &p in ctx.layout().pairs() {
        let upper = elementary_group(&ctx, p.k, p.t)?;
        let lower = lower_elementary_group(&ctx, p.k, p.t)?;
        println!("{p}: upper elementary group order {}, lower order {}", upper.order(), lower.order());
    }
    let nested = nested_hom(&ctx, IndexPair::new(0, 1), IndexPair::new(1, 0))?;
    println!("restriction (0,1) -> (1,0) is onto: {}", nested.hom.is_surjective());
    println!("kernel of theta at t=2 has order {}", theta_t(&ctx, 2)?.kernel().order());

    print!("{}", write_egrp(elementary_group(&ctx, 0, 1)?.as_ref()));
    let back = recover_system_fhgs(&ctx)?;
    println!("recovered {} members, equal to the original: {}", back.order(), back.same_members(&sys));
    Ok(())
}
