//! Text report of a normal chain.
//!
//! Lines starting with `#` are headers. Every other line describes one step:
//!
//! ```text
//! step <i> add (<k>,<t>) cosets <n> reps <label> <label> ...
//! ```

use std::fmt::Write as _;

use super::NormalChain;
use crate::error::{Error, Result};
use crate::index::IndexPair;
use crate::text::Lines;

/// One parsed step of a chain report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportStep {
    /// Step number, starting at 1.
    pub step: usize,
    /// The pair filled at this step.
    pub added: IndexPair,
    /// Index of the previous subgroup.
    pub cosets: usize,
    /// Labels of the coset representatives.
    pub reps: Vec<usize>,
}

/// Writes the chain as a report, each header line prefixed with `# `.
pub fn write_chain_report(chain: &NormalChain, headers: &[String]) -> String {
    let mut out = String::new();
    for h in headers {
        writeln!(out, "# {h}").expect("writing to a string");
    }
    writeln!(out, "# base order {}", chain.base.order()).expect("writing to a string");
    for (i, s) in chain.steps.iter().enumerate() {
        let labels: Vec<String> = (0..s.reps.len()).map(|l| l.to_string()).collect();
        writeln!(
            out,
            "step {} add ({},{}) cosets {} reps {}",
            i + 1,
            s.added.k,
            s.added.t,
            s.cosets,
            labels.join(" ")
        )
        .expect("writing to a string");
    }
    out
}

/// Parses the step lines of a chain report, skipping headers.
pub fn parse_chain_report(text: &str) -> Result<Vec<ReportStep>> {
    let mut steps = Vec::new();
    for line in Lines::new(text) {
        let n = line.number;
        if line.keyword() != "step" {
            return Err(Error::parse(n, format!("unexpected `{}`", line.keyword())));
        }
        if line.tokens.len() < 7 || line.text(2)? != "add" || line.text(4)? != "cosets" || line.text(6)? != "reps" {
            return Err(Error::parse(n, "expected `step <i> add (<k>,<t>) cosets <n> reps ...`"));
        }
        let step: usize = line.parse(1)?;
        if step != steps.len() + 1 {
            return Err(Error::parse(n, format!("step {step} out of order")));
        }
        let pair = line.text(3)?;
        let bad = || Error::parse(n, format!("cannot parse pair `{pair}`"));
        let (k, t) = pair
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .and_then(|s| s.split_once(','))
            .ok_or_else(bad)?;
        let added = IndexPair::new(k.parse().map_err(|_| bad())?, t.parse().map_err(|_| bad())?);
        let cosets: usize = line.parse(5)?;
        let reps: Vec<usize> = line.parse_rest(7)?;
        if reps.len() != cosets {
            return Err(Error::parse(n, format!("{} representatives for {cosets} cosets", reps.len())));
        }
        steps.push(ReportStep {
            step,
            added,
            cosets,
            reps,
        });
    }
    Ok(steps)
}
