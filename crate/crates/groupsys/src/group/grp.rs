//! The `.grp` group table format.
//!
//! ```text
//! group <name> <order>
//! <order> rows of <order> indices; row a, column b holds a·b
//! ```
//!
//! Lines starting with `#` are comments. Writing a group and reading it back
//! yields the same table, and rewriting yields the same bytes.

use super::{make_group, FiniteGroup, GroupOps};
use crate::error::{Error, Result};
use crate::text::Lines;

/// Parses a complete `.grp` document.
pub fn parse_grp(text: &str) -> Result<FiniteGroup> {
    let mut lines = Lines::new(text);
    let g = parse_grp_block(&mut lines)?;
    if let Some(extra) = lines.next() {
        return Err(Error::parse(extra.number, "trailing content after group table"));
    }
    Ok(g)
}

/// Parses one `group` header and its table from a token stream.
pub(crate) fn parse_grp_block(lines: &mut Lines<'_>) -> Result<FiniteGroup> {
    let (name, rows) = read_block(lines)?;
    make_group(rows, name)
}

/// Parses one `group` block whose identity must already be element 0.
///
/// Used where element indices carry meaning outside the table, so no
/// relabeling is allowed.
pub(crate) fn parse_grp_block_exact(lines: &mut Lines<'_>) -> Result<FiniteGroup> {
    let (name, rows) = read_block(lines)?;
    let order = rows.len();
    FiniteGroup::from_flat(name, order, rows.into_iter().flatten().collect())
}

fn read_block<'a>(lines: &mut Lines<'a>) -> Result<(&'a str, Vec<Vec<usize>>)> {
    let header = lines.require("group header")?;
    if header.keyword() != "group" {
        return Err(Error::parse(header.number, "expected `group <name> <order>`"));
    }
    header.expect_len(3)?;
    let name = header.text(1)?;
    let order: usize = header.parse(2)?;
    if order == 0 {
        return Err(Error::parse(header.number, "group order must be positive"));
    }
    let mut rows = Vec::with_capacity(order);
    for _ in 0..order {
        let line = lines.require("table row")?;
        line.expect_len(order)?;
        rows.push(line.parse_rest::<usize>(0)?);
    }
    Ok((name, rows))
}

/// Serializes a group in `.grp` format.
pub fn write_grp(g: &FiniteGroup) -> String {
    let mut out = format!("group {} {}\n", g.name(), g.order());
    for a in 0..g.order() {
        let row: Vec<String> = (0..g.order()).map(|b| g.op(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
