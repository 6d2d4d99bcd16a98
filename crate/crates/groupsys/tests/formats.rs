//! Round trips of every text format through the public API.

use groupsys::chain::{normal_chain, parse_chain_report, standard_filling, write_chain_report, FillingKind};
use groupsys::elementary::{extract_elementary_system, parse_esys, write_esys};
use groupsys::generator::{elementary_group, parse_egrp, parse_egrp_list, write_egrp, GeneratorContext};
use groupsys::group::{parse_grp, write_grp, FiniteGroup};
use groupsys::system::{parse_gsys, write_gsys};
use groupsys::Bounds;

fn strip_comments(text: &str) -> String {
    text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}

#[test]
fn grp_files_round_trip() {
    for text in [include_str!("../data/s3.grp"), include_str!("../data/z2.grp")] {
        let g = parse_grp(text).unwrap();
        assert_eq!(write_grp(&g), strip_comments(text));
    }
    assert_eq!(parse_grp(include_str!("../data/s3.grp")).unwrap(), FiniteGroup::symmetric3());
}

#[test]
fn gsys_files_round_trip() {
    let bounds = Bounds::default();
    for text in [
        include_str!("../data/trivial.gsys"),
        include_str!("../data/r2.gsys"),
        include_str!("../data/c2.gsys"),
        include_str!("../data/s3_letter.gsys"),
        include_str!("../data/parity.gsys"),
    ] {
        let sys = parse_gsys(text, &bounds).unwrap();
        let written = write_gsys(&sys);
        let back = parse_gsys(&written, &bounds).unwrap();
        assert!(back.same_members(&sys));
        assert_eq!(write_gsys(&back), written);
    }
}

#[test]
fn egrp_files_round_trip() {
    let text = include_str!("../data/r2.egrp");
    let tables = parse_egrp_list(text).unwrap();
    let rewritten: String = tables.iter().map(write_egrp).collect();
    assert_eq!(rewritten, strip_comments(text));
    let ctx = GeneratorContext::from_system(&parse_gsys(include_str!("../data/r2.gsys"), &Bounds::default()).unwrap()).unwrap();
    assert_eq!(tables.len(), ctx.layout().len());
    for table in &tables {
        let fresh = elementary_group(&ctx, table.anchor.k, table.anchor.t).unwrap();
        assert_eq!(write_egrp(&fresh), write_egrp(table));
        assert_eq!(write_egrp(&parse_egrp(&write_egrp(table)).unwrap()), write_egrp(table));
    }
    assert!(parse_egrp(text).is_err());
}

#[test]
fn esys_files_round_trip() {
    let bounds = Bounds::default();
    for text in [
        include_str!("../data/c2.esys"),
        include_str!("../data/r2.esys"),
        include_str!("../data/z2_shift.esys"),
    ] {
        let es = parse_esys(text, &bounds).unwrap();
        assert_eq!(write_esys(&es), strip_comments(text));
    }
    let sys = parse_gsys(include_str!("../data/c2.gsys"), &bounds).unwrap();
    let es = extract_elementary_system(&GeneratorContext::from_system(&sys).unwrap()).unwrap();
    assert_eq!(write_esys(&es), include_str!("../data/c2.esys"));
}

#[test]
fn chain_reports_round_trip() {
    let text = include_str!("../data/c2_time_rev.chain");
    let steps = parse_chain_report(text).unwrap();
    assert_eq!(steps.len(), 7);
    let sys = parse_gsys(include_str!("../data/c2.gsys"), &Bounds::default()).unwrap();
    let ctx = GeneratorContext::from_system(&sys).unwrap();
    let chain = normal_chain(&ctx, &standard_filling(ctx.layout(), FillingKind::TimeRev)).unwrap();
    let written = write_chain_report(&chain, &[]);
    assert_eq!(parse_chain_report(&written).unwrap(), steps);
    let product: usize = steps.iter().map(|s| s.cosets).product();
    assert_eq!(product, 16);
}
