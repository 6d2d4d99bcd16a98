//! The `.egrp` elementary group format.
//!
//! ```text
//! egrp <k> <t> elements <n> positions <p>
//! pos <k>,<t> ...          # the p pairs of the triangle, canonical order
//! elem <label> ...         # n lines, one triangle each, sorted
//! group <name> <n>         # operation table on element indices
//! <n rows of n indices>
//! ```
//!
//! A file may hold several blocks in a row. Element 0 must be the all-identity triangle and the table's identity must
//! be element 0. Loading re-verifies the group axioms.

use super::ElementaryGroupTable;
use crate::error::{Error, Result};
use crate::group::{parse_grp_block_exact, write_grp};
use crate::index::IndexPair;
use crate::text::Lines;

/// Serializes one elementary group.
pub fn write_egrp(table: &ElementaryGroupTable) -> String {
    let mut out = format!(
        "egrp {} {} elements {} positions {}\n",
        table.anchor.k,
        table.anchor.t,
        table.order(),
        table.positions.len()
    );
    let pos: Vec<String> = table.positions.iter().map(|p| format!("{},{}", p.k, p.t)).collect();
    out.push_str(&format!("pos {}\n", pos.join(" ")));
    for e in &table.elements {
        let labels: Vec<String> = e.iter().map(|l| l.to_string()).collect();
        out.push_str(&format!("elem {}\n", labels.join(" ")));
    }
    out.push_str(&write_grp(&table.group));
    out
}

/// Parses a document holding exactly one `egrp` block.
pub fn parse_egrp(text: &str) -> Result<ElementaryGroupTable> {
    let mut lines = Lines::new(text);
    let table = parse_egrp_block(&mut lines)?;
    if let Some(extra) = lines.next() {
        return Err(Error::parse(extra.number, "trailing content after egrp block"));
    }
    Ok(table)
}

/// Parses a document holding one or more `egrp` blocks, such as a dump of
/// every elementary group of a system.
pub fn parse_egrp_list(text: &str) -> Result<Vec<ElementaryGroupTable>> {
    let mut lines = Lines::new(text);
    let mut tables = vec![parse_egrp_block(&mut lines)?];
    while lines.peek().is_some() {
        tables.push(parse_egrp_block(&mut lines)?);
    }
    Ok(tables)
}

pub(crate) fn parse_egrp_block(lines: &mut Lines<'_>) -> Result<ElementaryGroupTable> {
    let header = lines.require("egrp header")?;
    if header.keyword() != "egrp" || header.tokens.len() != 7 || header.tokens[3] != "elements" || header.tokens[5] != "positions" {
        return Err(Error::parse(header.number, "expected `egrp <k> <t> elements <n> positions <p>`"));
    }
    let anchor = IndexPair::new(header.parse(1)?, header.parse(2)?);
    let n: usize = header.parse(4)?;
    let npos: usize = header.parse(6)?;

    let pos_line = lines.require("pos line")?;
    if pos_line.keyword() != "pos" {
        return Err(Error::parse(pos_line.number, "expected `pos` line"));
    }
    pos_line.expect_len(npos + 1)?;
    let positions = pos_line.tokens[1..]
        .iter()
        .map(|tok| {
            let (k, t) = tok
                .split_once(',')
                .ok_or_else(|| Error::parse(pos_line.number, format!("bad pair `{tok}`")))?;
            let k = k.parse().map_err(|_| Error::parse(pos_line.number, format!("bad pair `{tok}`")))?;
            let t = t.parse().map_err(|_| Error::parse(pos_line.number, format!("bad pair `{tok}`")))?;
            Ok(IndexPair::new(k, t))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut elements = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines.require("elem line")?;
        if line.keyword() != "elem" {
            return Err(Error::parse(line.number, "expected `elem` line"));
        }
        line.expect_len(npos + 1)?;
        elements.push(line.parse_rest::<usize>(1)?);
    }
    let group = parse_grp_block_exact(lines)?;
    ElementaryGroupTable::new(anchor, positions, elements, group)
}
