//! The `.esys` elementary system format.
//!
//! ```text
//! esys <name> depth <ℓ+1> window <t0> <t1>
//! labels <k> <t> <size>    # one line per index pair, layout order
//! egrp ...                 # one .egrp block per index pair, layout order
//! ```
//!
//! Loading re-verifies every invariant: shapes, the homomorphism condition,
//! realization of every listed triangle and closure of the global group.

use std::sync::Arc;

use super::{validate, ElementarySystem};
use crate::error::{Error, Result};
use crate::generator::{parse_egrp_block, write_egrp};
use crate::index::{IndexLayout, IndexPair};
use crate::text::Lines;
use crate::Bounds;

/// Serializes an elementary system.
pub fn write_esys(es: &ElementarySystem) -> String {
    let (t0, t1) = es.window();
    let mut out = format!("esys {} depth {} window {t0} {t1}\n", es.name(), es.depth());
    for (p, size) in es.layout().pairs().iter().zip(es.label_sizes()) {
        out.push_str(&format!("labels {} {} {size}\n", p.k, p.t));
    }
    for table in es.tables() {
        out.push_str(&write_egrp(table));
    }
    out
}

/// Parses and fully verifies an elementary system.
pub fn parse_esys(text: &str, bounds: &Bounds) -> Result<ElementarySystem> {
    let mut lines = Lines::new(text);
    let header = lines.require("esys header")?;
    if header.keyword() != "esys" || header.tokens.len() != 7 || header.tokens[2] != "depth" || header.tokens[4] != "window" {
        return Err(Error::parse(header.number, "expected `esys <name> depth <d> window <t0> <t1>`"));
    }
    let name = header.text(1)?;
    let depth: usize = header.parse(3)?;
    let (t0, t1): (i64, i64) = (header.parse(5)?, header.parse(6)?);
    if depth == 0 || t1 < t0 || ((t1 - t0) as usize) + 1 < depth {
        return Err(Error::parse(header.number, "depth must be between 1 and the window length"));
    }
    let layout = IndexLayout::new(depth - 1, t0, t1);
    let mut label_sizes = Vec::with_capacity(layout.len());
    for &p in layout.pairs() {
        let line = lines.require("labels line")?;
        line.expect_len(4)?;
        if line.keyword() != "labels" || IndexPair::new(line.parse(1)?, line.parse(2)?) != p {
            return Err(Error::parse(line.number, format!("expected `labels {} {} <size>`", p.k, p.t)));
        }
        label_sizes.push(line.parse(3)?);
    }
    let mut tables = Vec::with_capacity(layout.len());
    for _ in layout.pairs() {
        tables.push(Arc::new(parse_egrp_block(&mut lines)?));
    }
    if let Some(extra) = lines.next() {
        return Err(Error::parse(extra.number, "trailing content after the last egrp block"));
    }
    let es = ElementarySystem::new(name, layout, label_sizes, tables)?;
    validate(&es, bounds)?;
    Ok(es)
}

#[cfg(test)]
mod tests {
    use super::super::tests::extracted;
    use super::*;
    use crate::generator::fixtures::*;

    #[test]
    fn round_trip_is_bit_exact() {
        for sys in [trivial(), r2(), c2(), s3_letters()] {
            let (_, es) = extracted(&sys);
            let text = write_esys(&es);
            let back = parse_esys(&text, &Bounds::default()).unwrap();
            assert_eq!(write_esys(&back), text);
        }
    }

    #[test]
    fn damaged_files_are_rejected() {
        let (_, es) = extracted(&c2());
        let text = write_esys(&es);
        assert!(matches!(parse_esys(&text.replace("depth 2", "depth x"), &Bounds::default()), Err(Error::Parse { .. })));
        assert!(parse_esys(&text.replacen("labels 0 0", "labels 0 1", 1), &Bounds::default()).is_err());
        let truncated: String = text.lines().take(20).map(|l| format!("{l}\n")).collect();
        assert!(parse_esys(&truncated, &Bounds::default()).is_err());
        assert!(parse_esys(&format!("{text}extra\n"), &Bounds::default()).is_err());
    }
}
