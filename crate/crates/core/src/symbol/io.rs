//! Plain-text description of symbols and weights.
//!
//! ```text
//! # a symbol
//! V.1 = 0.3
//! V.-1 = 0.3, 0.1
//! [singularity]
//! theta = 0
//! alpha = 0.25
//! beta = 0.1, 0
//! [singularity]
//! theta = pi/2
//! beta = -0.2
//! ```
//!
//! A weight uses `[node]` blocks with `lambda`, `alpha`, `beta`; a node at
//! `lambda = 1` or `-1` sets the endpoint exponent (β must vanish there).
//! `kind = weight` marks a weight with no interior nodes. Angles and numbers
//! accept `pi`, `k*pi`, `pi/m` and `k*pi/m`. Missing α, β default to 0.

use super::{FHSymbol, HankelWeight, Node, Singularity, SmoothPart};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub enum Described {
    Symbol(FHSymbol),
    Weight(HankelWeight),
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn number(tok: &str, line: usize) -> Result<f64> {
    let t = tok.trim();
    let bad = || perr(line, format!("bad number '{tok}'"));
    if let Some(pos) = t.find("pi") {
        let (pre, post) = (&t[..pos], &t[pos + 2..]);
        let k = match pre.trim_end_matches('*') {
            "" => 1.0,
            "-" => -1.0,
            s => s.parse::<f64>().map_err(|_| bad())?,
        };
        let m = match post {
            "" => 1.0,
            d => d.strip_prefix('/').ok_or_else(bad)?.parse::<f64>().map_err(|_| bad())?,
        };
        return Ok(k * PI / m);
    }
    t.parse::<f64>().map_err(|_| bad())
}

fn complex(value: &str, line: usize) -> Result<Complex64> {
    let parts: Vec<&str> = value.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(Complex64::new(number(re, line)?, 0.0)),
        [re, im] => Ok(Complex64::new(number(re, line)?, number(im, line)?)),
        _ => Err(perr(line, format!("expected 're' or 're, im', got '{value}'"))),
    }
}

#[derive(Default)]
struct Block {
    line: usize,
    point: Option<f64>,
    alpha: Complex64,
    beta: Complex64,
}

enum Section {
    Top,
    Sing(Block),
    Node(Block),
}

pub fn parse_symbol_or_weight(text: &str) -> Result<Described> {
    let mut kind: Option<String> = None;
    let mut v = SmoothPart::zero();
    let mut sings: Vec<Block> = Vec::new();
    let mut nodes: Vec<Block> = Vec::new();
    let mut cur = Section::Top;
    let flush = |cur: Section, sings: &mut Vec<Block>, nodes: &mut Vec<Block>| match cur {
        Section::Top => {}
        Section::Sing(b) => sings.push(b),
        Section::Node(b) => nodes.push(b),
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if body.starts_with('[') {
            let next = match body {
                "[singularity]" => Section::Sing(Block { line, ..Default::default() }),
                "[node]" => Section::Node(Block { line, ..Default::default() }),
                other => return Err(perr(line, format!("unknown section '{other}'"))),
            };
            flush(std::mem::replace(&mut cur, next), &mut sings, &mut nodes);
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| perr(line, "expected 'key = value'"))?;
        match &mut cur {
            Section::Top => {
                if let Some(k) = key.strip_prefix("V.") {
                    let k: i64 = k.parse().map_err(|_| perr(line, format!("bad index in '{key}'")))?;
                    v.set(k, v.get(k) + complex(value, line)?);
                } else if key == "kind" {
                    if value != "symbol" && value != "weight" {
                        return Err(perr(line, format!("unknown kind '{value}'")));
                    }
                    kind = Some(value.to_string());
                } else {
                    return Err(perr(line, format!("unknown key '{key}'")));
                }
            }
            Section::Sing(_) | Section::Node(_) => {
                let point_key = if matches!(cur, Section::Sing(_)) { "theta" } else { "lambda" };
                let b = match &mut cur {
                    Section::Sing(b) | Section::Node(b) => b,
                    Section::Top => unreachable!(),
                };
                match key {
                    "alpha" => b.alpha = complex(value, line)?,
                    "beta" => b.beta = complex(value, line)?,
                    k if k == point_key => b.point = Some(number(value, line)?),
                    k => return Err(perr(line, format!("unknown key '{k}' in block"))),
                }
            }
        }
    }
    flush(cur, &mut sings, &mut nodes);

    let is_weight = kind.as_deref() == Some("weight") || (kind.is_none() && !nodes.is_empty());
    if is_weight {
        if let Some(b) = sings.first() {
            return Err(perr(b.line, "[singularity] blocks are not allowed in a weight"));
        }
        let (mut ap, mut am) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        let mut inner = Vec::new();
        for b in nodes {
            let l = b.point.ok_or_else(|| perr(b.line, "node without lambda"))?;
            if l == 1.0 || l == -1.0 {
                if b.beta != Complex64::new(0.0, 0.0) {
                    return Err(perr(b.line, "beta must vanish at an endpoint"));
                }
                if l == 1.0 {
                    ap = b.alpha;
                } else {
                    am = b.alpha;
                }
            } else {
                inner.push(Node { lambda: l, alpha: b.alpha, beta: b.beta });
            }
        }
        inner.sort_by(|x, y| y.lambda.total_cmp(&x.lambda));
        Ok(Described::Weight(HankelWeight::new(v, inner, ap, am)?))
    } else {
        if let Some(b) = nodes.first() {
            return Err(perr(b.line, "[node] blocks need a weight"));
        }
        let mut s = Vec::new();
        for b in sings {
            let t = b.point.ok_or_else(|| perr(b.line, "singularity without theta"))?;
            s.push(Singularity::new(t, b.alpha, b.beta));
        }
        s.sort_by(|x, y| x.theta.total_cmp(&y.theta));
        Ok(Described::Symbol(FHSymbol::new(v, s)?))
    }
}

pub fn parse_symbol(text: &str) -> Result<FHSymbol> {
    match parse_symbol_or_weight(text)? {
        Described::Symbol(s) => Ok(s),
        Described::Weight(_) => Err(perr(0, "expected a symbol, found a weight")),
    }
}

pub fn parse_weight(text: &str) -> Result<HankelWeight> {
    match parse_symbol_or_weight(text)? {
        Described::Weight(w) => Ok(w),
        Described::Symbol(_) => Err(perr(0, "expected a weight, found a symbol")),
    }
}

fn c(z: Complex64) -> String {
    format!("{:e}, {:e}", z.re, z.im)
}

fn smooth_lines(v: &SmoothPart, out: &mut String) {
    for (k, z) in v.pairs() {
        out.push_str(&format!("V.{k} = {}\n", c(z)));
    }
}

pub fn format_symbol(f: &FHSymbol) -> String {
    let mut s = String::from("kind = symbol\n");
    smooth_lines(&f.smooth, &mut s);
    for g in f.singularities() {
        s.push_str(&format!(
            "[singularity]\ntheta = {:e}\nalpha = {}\nbeta = {}\n",
            g.theta,
            c(g.alpha),
            c(g.beta)
        ));
    }
    s
}

pub fn format_weight(w: &HankelWeight) -> String {
    let mut s = String::from("kind = weight\n");
    smooth_lines(&w.smooth_u, &mut s);
    for nd in w.points() {
        s.push_str(&format!(
            "[node]\nlambda = {:e}\nalpha = {}\nbeta = {}\n",
            nd.lambda,
            c(nd.alpha),
            c(nd.beta)
        ));
    }
    s
}
