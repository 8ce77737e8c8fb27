//! Plain-text code (`.hc`) and group (`.hg`) files.
//!
//! Both start with a header line `m q`. A code file then lists one word per
//! line as space-separated symbols. A group file lists one generator per
//! line: `m` alphabet permutations in image notation separated by `;`, then
//! `|`, then the entry permutation. Blank lines and lines starting with `#`
//! are skipped.

use std::fmt::Write as _;

use crate::error::{HntError, Result};
use crate::groups::{AutElem, GroupGens, Perm};
use crate::hamming::{Code, GraphParams, Symbol, Vertex};

fn parse_err(line: usize, message: impl Into<String>) -> HntError {
    HntError::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| parse_err(line, format!("not a number: {t:?}")))
        })
        .collect()
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<GraphParams> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing \"m q\" header"))?;
    match parse_numbers(line, text)?.as_slice() {
        &[m, q] => {
            GraphParams::new(m as usize, q as usize).map_err(|e| parse_err(line, e.to_string()))
        }
        _ => Err(parse_err(line, "header must be \"m q\"")),
    }
}

pub fn read_code(text: &str) -> Result<Code> {
    let mut lines = content_lines(text);
    let params = parse_header(&mut lines)?;
    let mut seen = std::collections::HashSet::new();
    let mut words = Vec::new();
    for (line, text) in lines {
        let symbols: Vec<Symbol> = parse_numbers(line, text)?;
        let v = Vertex::new(params, symbols).map_err(|e| parse_err(line, e.to_string()))?;
        if !seen.insert(v.index()) {
            return Err(parse_err(line, format!("duplicate word {v}")));
        }
        words.push(v);
    }
    Code::new(params, words).map_err(|e| parse_err(0, e.to_string()))
}

pub fn write_code(code: &Code) -> String {
    let p = code.params();
    let mut out = format!("{} {}\n", p.m(), p.q());
    for w in code.words() {
        let syms: Vec<String> = w.symbols().iter().map(|s| s.to_string()).collect();
        out.push_str(&syms.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_group(text: &str) -> Result<GroupGens> {
    let mut lines = content_lines(text);
    let params = parse_header(&mut lines)?;
    let mut gens = Vec::new();
    for (line, text) in lines {
        let (base, top) = text
            .split_once('|')
            .ok_or_else(|| parse_err(line, "expected \"h_0; ...; h_(m-1) | sigma\""))?;
        let perm = |s: &str| {
            Perm::from_images(parse_numbers(line, s)?).map_err(|e| parse_err(line, e.to_string()))
        };
        let base = base.split(';').map(perm).collect::<Result<Vec<_>>>()?;
        let x =
            AutElem::new(params, base, perm(top)?).map_err(|e| parse_err(line, e.to_string()))?;
        gens.push(x);
    }
    GroupGens::new(params, gens)
}

pub fn write_group(x: &GroupGens) -> String {
    let p = x.params();
    let mut out = format!("{} {}\n", p.m(), p.q());
    for g in x.gens() {
        let base: Vec<String> = (0..p.m())
            .map(|j| g.base_perm(j).to_image_string())
            .collect();
        let _ = writeln!(
            out,
            "{} | {}",
            base.join("; "),
            g.top_perm().to_image_string()
        );
    }
    out
}
