//! Generator bases, the two encoders and decoding, on a nonabelian system.
//!
//! Run with `cargo run --example generator_basis`.

use groupsys::system::{
    alphabet_matrix, decode_to_tensor, encode_spectral_domain, encode_time_domain, extract_basis, parse_gsys,
};
use groupsys::Bounds;

fn main() -> groupsys::Result<()> {
    let sys = parse_gsys(include_str!("../data/s3_letter.gsys"), &Bounds::default())?;
    let basis = extract_basis(&sys)?;
    println!("{}: ell = {}, transversal sizes {:?}", sys.name(), basis.ell(), basis.sizes());
    for (pos, pair) in basis.layout().pairs().iter().enumerate() {
        for label in 1..basis.transversal(pos).len() {
            println!("generator at {pair} label {label}: {:?}", basis.generator(pos, label));
        }
    }

    let mut disagreements = 0;
    for r in basis.all_tensors() {
        let a = encode_time_domain(&basis, &r)?;
        assert_eq!(decode_to_tensor(&basis, &a)?, r);
        if encode_spectral_domain(&basis, &r)? != a {
            disagreements += 1;
        }
    }
    println!("{} tensors decoded exactly; encoders disagree on {disagreements}", basis.tensor_count());

    let r = basis.tensor_from_index(basis.tensor_count() - 1);
    let m = alphabet_matrix(&basis, &r, 1)?;
    println!("alphabet matrix at t=1 of the last tensor: {:?}", m.entries);
    Ok(())
}
