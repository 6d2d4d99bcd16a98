//! Group systems on a window: controllability, granules and the Zassenhaus map.
//!
//! Run with `cargo run --example group_system`.

use groupsys::group::GroupOps;
use groupsys::system::{
    controllability_index, parse_gsys, spectral_granule, time_granule, write_gsys, x_subgroup, y_subgroup, zassenhaus_map,
};
use groupsys::Bounds;

fn main() -> groupsys::Result<()> {
    let sys = parse_gsys(include_str!("../data/c2.gsys"), &Bounds::default())?;
    println!("{} has {} members and controllability index {}", sys.name(), sys.order(), controllability_index(&sys)?);
    print!("{}", write_gsys(&sys));

    for t in sys.times() {
        println!("t={t}: |X^t| = {}, |Y^t| = {}", x_subgroup(&sys, t)?.order(), y_subgroup(&sys, t)?.order());
    }
    for i in sys.times() {
        for m in 0..=sys.ell()? as i64 {
            if i + m > sys.window().1 {
                continue;
            }
            let lambda = time_granule(&sys, i, m)?;
            let gamma = spectral_granule(&sys, i, m)?;
            let z = zassenhaus_map(&sys, i, m)?;
            println!(
                "granule ({i},{m}): time order {}, spectral order {}, isomorphism {}",
                lambda.order(),
                gamma.order(),
                z.induced.is_injective() && z.induced.is_surjective()
            );
        }
    }

    let narrow = sys.restricted(1, 2)?;
    println!("restricted to [1,2]: {} members", narrow.order());
    Ok(())
}
