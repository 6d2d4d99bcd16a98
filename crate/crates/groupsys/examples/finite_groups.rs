//! Finite group arithmetic: subgroups, quotients, products and extensions.
//!
//! Run with `cargo run --example finite_groups`.

use groupsys::group::{
    direct_product, enumerate_extensions, is_isomorphic, is_normal, quotient, subdirect_product, subgroup_closure,
    write_grp, FiniteGroup, GroupOps, Homomorphism,
};

fn main() -> groupsys::Result<()> {
    let s3 = FiniteGroup::symmetric3();
    print!("{}", write_grp(&s3));

    let rotations = subgroup_closure(&s3, &[3]);
    println!("subgroup generated by 3: {:?}, normal: {}", rotations.members(), is_normal(&s3, &rotations)?);
    let q = quotient(&s3, &rotations)?;
    println!("S3 / A3 has order {} with cosets {:?}", q.order(), q.cosets());

    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let z6 = direct_product(&z2, &z3);
    println!("Z2 x Z3 is cyclic: {}", is_isomorphic(&z6.group, &FiniteGroup::cyclic(6)));

    let z4 = FiniteGroup::cyclic(4);
    let mod2 = Homomorphism::new(&z4, &z2, (0..4).map(|a| a % 2).collect())?;
    let sub = subdirect_product(&z4, &z4, &mod2, &mod2)?;
    println!("subdirect product of Z4 and Z4 over Z2 has order {}", sub.group.order());

    let list = enumerate_extensions(&z2, &z2, 64)?;
    for (i, ext) in list.extensions.iter().enumerate() {
        let cyclic = (0..ext.group.order()).any(|a| ext.group.element_order(a) == 4);
        println!("extension {i} of Z2 by Z2: split {}, cyclic {cyclic}", ext.split);
    }
    println!("list complete: {}", list.complete);
    Ok(())
}
