//! The `.gsys` group system format.
//!
//! ```text
//! system <name>
//! window <t0> <t1>
//! group <name> <order>          # optional inline alphabet table
//! ...
//! alphabet <t>|all <groupname>
//! seq <i0> <i1> ...             # member seeds, saturated on load
//! mode strict                   # optional: seq lines must already form a group
//! rule conv Z<n> <expr> ...     # linear rule, replaces alphabet and seq lines
//! ```
//!
//! A rule expression is a sum of terms `cxd`, meaning `c · x^{t-d}`, for
//! example `x0+x1` or `2x0+x2`. The alphabet of a rule with `r` outputs is
//! `Z<n>` to the power `r`, with the first output most significant in the
//! letter index. Inputs are supported inside the window and outputs are
//! truncated to the window. Near the window edges a rule may realize only
//! part of that alphabet; there the alphabet shrinks to the realized letters,
//! renumbered in increasing order.

use std::collections::HashMap;

use super::{GroupSystem, Sequence};
use crate::error::{Error, Result};
use crate::group::{parse_grp_block, write_grp, FiniteGroup};
use crate::text::Lines;
use crate::Bounds;

struct Rule {
    modulus: usize,
    outputs: Vec<Vec<(usize, usize)>>,
}

fn parse_term(term: &str, line: usize) -> Result<(usize, usize)> {
    let bad = || Error::parse(line, format!("cannot parse rule term `{term}`"));
    let (coef, delay) = term.split_once('x').ok_or_else(bad)?;
    let coef = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
    let delay = delay.parse().map_err(|_| bad())?;
    Ok((coef, delay))
}

fn parse_expr(expr: &str, line: usize) -> Result<Vec<(usize, usize)>> {
    expr.split('+').map(|term| parse_term(term, line)).collect()
}

fn resolve(name: &str, inline: &HashMap<String, FiniteGroup>, line: usize) -> Result<FiniteGroup> {
    inline
        .get(name)
        .cloned()
        .or_else(|| FiniteGroup::builtin(name))
        .ok_or_else(|| Error::parse(line, format!("unknown group `{name}`")))
}

/// Parses a `.gsys` document into a verified group system.
pub fn parse_gsys(text: &str, bounds: &Bounds) -> Result<GroupSystem> {
    let mut lines = Lines::new(text);
    let mut name = None;
    let mut window = None;
    let mut inline: HashMap<String, FiniteGroup> = HashMap::new();
    let mut alphabets: Vec<Option<FiniteGroup>> = Vec::new();
    let mut seqs: Vec<Sequence> = Vec::new();
    let mut strict = false;
    let mut rule: Option<Rule> = None;
    let mut saw_alphabet = false;

    while let Some(line) = lines.peek().cloned() {
        match line.keyword() {
            "group" => {
                let g = parse_grp_block(&mut lines)?;
                inline.insert(g.name().to_string(), g);
                continue;
            }
            "system" => {
                line.expect_len(2)?;
                name = Some(line.text(1)?.to_string());
            }
            "window" => {
                line.expect_len(3)?;
                let (t0, t1): (i64, i64) = (line.parse(1)?, line.parse(2)?);
                if t1 < t0 {
                    return Err(Error::parse(line.number, "window end precedes start"));
                }
                window = Some((t0, t1));
                alphabets = vec![None; (t1 - t0 + 1) as usize];
            }
            "alphabet" => {
                line.expect_len(3)?;
                let (t0, t1) = window.ok_or_else(|| Error::parse(line.number, "alphabet before window"))?;
                if rule.is_some() {
                    return Err(Error::parse(line.number, "alphabet lines conflict with a rule"));
                }
                let g = resolve(line.text(2)?, &inline, line.number)?;
                if line.text(1)? == "all" {
                    alphabets.iter_mut().for_each(|a| *a = Some(g.clone()));
                } else {
                    let t: i64 = line.parse(1)?;
                    if t < t0 || t > t1 {
                        return Err(Error::parse(line.number, format!("time {t} outside window")));
                    }
                    alphabets[(t - t0) as usize] = Some(g);
                }
                saw_alphabet = true;
            }
            "seq" => {
                if rule.is_some() {
                    return Err(Error::parse(line.number, "seq lines conflict with a rule"));
                }
                let s: Sequence = line.parse_rest(1)?;
                if s.len() != alphabets.len() {
                    return Err(Error::parse(line.number, "sequence length does not match window"));
                }
                seqs.push(s);
            }
            "mode" => {
                line.expect_len(2)?;
                match line.text(1)? {
                    "strict" => strict = true,
                    "saturate" => strict = false,
                    other => return Err(Error::parse(line.number, format!("unknown mode `{other}`"))),
                }
            }
            "rule" => {
                if line.text(1)? != "conv" {
                    return Err(Error::parse(line.number, "only `rule conv` is supported"));
                }
                if saw_alphabet || !seqs.is_empty() {
                    return Err(Error::parse(line.number, "a rule conflicts with alphabet and seq lines"));
                }
                let modulus: usize = line
                    .text(2)?
                    .strip_prefix('Z')
                    .and_then(|n| n.parse().ok())
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::parse(line.number, "rule group must be Z<n>"))?;
                let outputs = line.tokens[3..]
                    .iter()
                    .map(|e| parse_expr(e, line.number))
                    .collect::<Result<Vec<_>>>()?;
                if outputs.is_empty() {
                    return Err(Error::parse(line.number, "rule needs at least one output"));
                }
                rule = Some(Rule { modulus, outputs });
            }
            other => return Err(Error::parse(line.number, format!("unknown keyword `{other}`"))),
        }
        lines.next();
    }

    let name = name.ok_or_else(|| Error::parse(0, "missing `system` line"))?;
    let window = window.ok_or_else(|| Error::parse(0, "missing `window` line"))?;
    if let Some(rule) = rule {
        return unroll_rule(&name, window, &rule, bounds);
    }
    let alphabets = alphabets
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| Error::parse(0, format!("no alphabet for time {}", window.0 + i as i64))))
        .collect::<Result<Vec<_>>>()?;
    if strict {
        let mut members = seqs;
        members.push(vec![0; alphabets.len()]);
        GroupSystem::from_members(&name, window, alphabets, members)
    } else {
        GroupSystem::from_generators(&name, window, alphabets, &seqs, bounds)
    }
}

fn unroll_rule(name: &str, window: (i64, i64), rule: &Rule, bounds: &Bounds) -> Result<GroupSystem> {
    let width = rule.outputs.len();
    let alphabet_name = vec![format!("Z{}", rule.modulus); width].join("x");
    let alphabet = FiniteGroup::builtin(&alphabet_name)
        .ok_or_else(|| Error::parse(0, format!("cannot build alphabet {alphabet_name}")))?;
    let len = (window.1 - window.0 + 1) as usize;
    let seeds: Vec<Sequence> = (0..len)
        .map(|impulse| {
            (0..len)
                .map(|s| {
                    rule.outputs.iter().fold(0, |acc, terms| {
                        let value = terms
                            .iter()
                            .filter(|&&(_, d)| s >= d && s - d == impulse)
                            .map(|&(c, _)| c)
                            .sum::<usize>();
                        acc * rule.modulus + value % rule.modulus
                    })
                })
                .collect()
        })
        .collect();
    GroupSystem::from_generators_realized(name, window, vec![alphabet; len], &seeds, bounds)
}

/// Writes a system as an explicit strict member list.
///
/// Alphabets that match a built-in group by name and table are referenced by
/// name; any other alphabet is embedded as an inline `group` block.
pub fn write_gsys(sys: &GroupSystem) -> String {
    let mut out = format!("system {}\n", sys.name());
    let (t0, t1) = sys.window();
    out.push_str(&format!("window {t0} {t1}\n"));
    let mut embedded: Vec<String> = Vec::new();
    for g in sys.alphabets() {
        let builtin = FiniteGroup::builtin(g.name()).is_some_and(|b| b.same_table(g));
        if !builtin && !embedded.iter().any(|n| n == g.name()) {
            out.push_str(&write_grp(g));
            embedded.push(g.name().to_string());
        }
    }
    for t in sys.times() {
        out.push_str(&format!("alphabet {t} {}\n", sys.alphabet(t).name()));
    }
    out.push_str("mode strict\n");
    for m in sys.members().iter().skip(1) {
        let letters: Vec<String> = m.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("seq {}\n", letters.join(" ")));
    }
    out
}
