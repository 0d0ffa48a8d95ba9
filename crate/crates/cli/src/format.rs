//! The line-oriented presentation format.
//!
//! ```text
//! ring Z/4
//! weights 0..2
//! degcap 6
//! object X
//! gen e : X -> X deg 1 wt 0
//! order e 2
//! d e = 2*1_X
//! mul e*e = 0
//! ```
//!
//! `#` starts a comment. Units `1_X` exist for every object. `mul g*f` gives the
//! composite `g∘f`; omitted products are zero. Coefficients are integers or `p/q`.
//! `degcap` and `order` are optional.

use std::fmt::Write as _;

use mixhom::dgcat::{DgError, DgPresentation, LinComb};
use mixhom::exactlin::RingSpec;
use mixhom::Coeff;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("in section `{section}`: {message}")]
    Schema { section: String, message: String },
    #[error("{0}")]
    Io(String),
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError::Parse { line, column, message: message.into() }
}

fn schema(section: &str, message: impl Into<String>) -> InputError {
    InputError::Schema { section: section.to_string(), message: message.into() }
}

fn dg(section: &str, e: DgError) -> InputError {
    schema(section, e.to_string())
}

/// `a..b` with integer ends.
pub fn parse_range(s: &str) -> Option<(i64, i64)> {
    let (a, b) = s.split_once("..")?;
    let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
    (a <= b).then_some((a, b))
}

pub fn parse_coeff(s: &str) -> Option<Coeff> {
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (BigInt, BigInt) = (p.parse().ok()?, q.parse().ok()?);
            (!q.is_zero()).then(|| Coeff::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Coeff::from_integer),
    }
}

/// A linear combination `c1*m1 + c2*m2 - m3`, or `0`. Binary `+`/`-` must be
/// surrounded by spaces. `col` is the column of the first character of `s`.
fn parse_lincomb(p: &DgPresentation, s: &str, line: usize, col: usize) -> Result<LinComb, InputError> {
    let mut out = LinComb::zero();
    if s.trim() == "0" {
        return Ok(out);
    }
    let mut sign = Coeff::one();
    let mut offset = 0;
    let tokens: Vec<&str> = s.split(' ').collect();
    let mut expect_term = true;
    for tok in tokens {
        let here = col + offset;
        offset += tok.len() + 1;
        if tok.is_empty() {
            continue;
        }
        if !expect_term {
            sign = match tok {
                "+" => Coeff::one(),
                "-" => -Coeff::one(),
                _ => return Err(parse_err(line, here, format!("expected `+` or `-`, found `{tok}`"))),
            };
            expect_term = true;
            continue;
        }
        let (neg, body) = match tok.strip_prefix('-') {
            Some(rest) if !rest.is_empty() => (true, rest),
            _ => (false, tok),
        };
        let (c, name) = match body.split_once('*') {
            Some((c, n)) => (parse_coeff(c).ok_or_else(|| parse_err(line, here, format!("bad coefficient `{c}`")))?, n),
            None => (Coeff::one(), body),
        };
        let m = p.find(name).ok_or_else(|| parse_err(line, here, format!("unknown morphism `{name}`")))?;
        let c = if neg { -c } else { c };
        out.add_term(m, &sign * c);
        expect_term = false;
    }
    if expect_term {
        return Err(parse_err(line, col + s.len(), "expected a term"));
    }
    Ok(out)
}

struct Draft {
    p: Option<DgPresentation>,
    ring_override: Option<RingSpec>,
    window: Option<(i64, i64)>,
    degcap: Option<i64>,
}

impl Draft {
    fn pres(&mut self, section: &str) -> Result<&mut DgPresentation, InputError> {
        if self.p.is_none() {
            let ring = self.ring_override.clone().ok_or_else(|| schema(section, "`ring` must come first"))?;
            let window = self.window.ok_or_else(|| schema(section, "`weights` must precede declarations"))?;
            let mut p = DgPresentation::new(ring, window).map_err(|e| dg("weights", e))?;
            p.set_degree_cap(self.degcap);
            self.p = Some(p);
        }
        Ok(self.p.as_mut().expect("just built"))
    }
}

/// Parses a presentation. `ring` replaces the ring named in the file.
pub fn parse_dgc(text: &str, ring: Option<RingSpec>) -> Result<DgPresentation, InputError> {
    let forced = ring.is_some();
    let mut draft = Draft { p: None, ring_override: ring, window: None, degcap: None };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let indent = content.len() - trimmed.len() + 1;
        let body = trimmed.trim_end();
        if body.is_empty() {
            continue;
        }
        let (kw, rest) = body.split_once(' ').unwrap_or((body, ""));
        let rest_col = indent + kw.len() + 1;
        let rest = rest.trim();
        match kw {
            "ring" => {
                if draft.p.is_some() {
                    return Err(schema("ring", "`ring` must come before any declaration"));
                }
                let r: RingSpec = rest.parse().map_err(|e| parse_err(line, rest_col, format!("{e}")))?;
                if !forced {
                    draft.ring_override = Some(r);
                }
            }
            "weights" => {
                let w = parse_range(rest).ok_or_else(|| parse_err(line, rest_col, format!("expected `a..b`, found `{rest}`")))?;
                match draft.p.as_mut() {
                    Some(p) => p.set_weight_window(w).map_err(|e| dg("weights", e))?,
                    None => draft.window = Some(w),
                }
            }
            "degcap" => {
                let c: i64 = rest.parse().map_err(|_| parse_err(line, rest_col, format!("bad degree cap `{rest}`")))?;
                if c < 0 {
                    return Err(schema("degcap", "negative degree cap"));
                }
                draft.degcap = Some(c);
                if let Some(p) = draft.p.as_mut() {
                    p.set_degree_cap(Some(c));
                }
            }
            "object" => {
                if rest.is_empty() || rest.contains(' ') {
                    return Err(parse_err(line, rest_col, "expected one object name"));
                }
                draft.pres("object")?.add_object(rest).map_err(|e| dg("object", e))?;
            }
            "gen" => parse_gen(draft.pres("gen")?, rest, line, rest_col)?,
            "order" => {
                let p = draft.pres("order")?;
                let (name, n) = rest.split_once(' ').ok_or_else(|| parse_err(line, rest_col, "expected `order <name> <n>`"))?;
                let m = p.find(name).ok_or_else(|| parse_err(line, rest_col, format!("unknown morphism `{name}`")))?;
                let n: BigInt = n.trim().parse().map_err(|_| parse_err(line, rest_col + name.len() + 1, "bad order"))?;
                if n.is_negative() {
                    return Err(schema("order", "negative order"));
                }
                p.set_order(m, n).map_err(|e| dg("order", e))?;
            }
            "d" => {
                let p = draft.pres("d")?;
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| parse_err(line, rest_col, "expected `d <name> = …`"))?;
                let name = lhs.trim();
                let m = p.find(name).ok_or_else(|| parse_err(line, rest_col, format!("unknown morphism `{name}`")))?;
                let value = parse_lincomb(p, rhs.trim_start(), line, rest_col + lhs.len() + 1 + (rhs.len() - rhs.trim_start().len()))?;
                p.set_differential(m, value).map_err(|e| dg("d", e))?;
            }
            "mul" => {
                let p = draft.pres("mul")?;
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| parse_err(line, rest_col, "expected `mul <g>*<f> = …`"))?;
                let (g, f) = lhs.trim().split_once('*').ok_or_else(|| parse_err(line, rest_col, "expected `<g>*<f>`"))?;
                let gi = p.find(g).ok_or_else(|| parse_err(line, rest_col, format!("unknown morphism `{g}`")))?;
                let fi = p.find(f).ok_or_else(|| parse_err(line, rest_col + g.len() + 1, format!("unknown morphism `{f}`")))?;
                let value = parse_lincomb(p, rhs.trim_start(), line, rest_col + lhs.len() + 1 + (rhs.len() - rhs.trim_start().len()))?;
                p.set_product(gi, fi, value).map_err(|e| dg("mul", e))?;
            }
            other => return Err(parse_err(line, indent, format!("unknown keyword `{other}`"))),
        }
    }
    Ok(draft.pres("ring")?.clone())
}

fn parse_gen(p: &mut DgPresentation, rest: &str, line: usize, col: usize) -> Result<(), InputError> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    let shape = "expected `gen <name> : <X> -> <Y> deg <h> wt <w>`";
    if words.len() != 9 || words[1] != ":" || words[3] != "->" || words[5] != "deg" || words[7] != "wt" {
        return Err(parse_err(line, col, shape));
    }
    let obj = |n: &str| p.object_index(n).ok_or_else(|| schema("gen", format!("unknown object `{n}`")));
    let (s, t) = (obj(words[2])?, obj(words[4])?);
    let h: i64 = words[6].parse().map_err(|_| parse_err(line, col, format!("bad degree `{}`", words[6])))?;
    let w: i64 = words[8].parse().map_err(|_| parse_err(line, col, format!("bad weight `{}`", words[8])))?;
    if h < 0 {
        return Err(schema("gen", format!("negative homological degree on `{}`", words[0])));
    }
    let (lo, hi) = p.weight_window();
    if w < lo || w > hi {
        return Err(schema("gen", format!("weight {w} of `{}` lies outside {lo}..{hi}", words[0])));
    }
    if let Some(cap) = p.degree_cap() {
        if h > cap {
            return Err(schema("gen", format!("degree {h} of `{}` exceeds the cap {cap}", words[0])));
        }
    }
    p.add_morphism(words[0], s, t, h, w).map_err(|e| dg("gen", e))?;
    Ok(())
}

/// Emits `p` so that [`parse_dgc`] rebuilds an equal presentation. Objects and
/// generators appear in basis order.
pub fn emit_dgc(p: &DgPresentation) -> String {
    let mut out = String::new();
    let (lo, hi) = p.weight_window();
    let _ = writeln!(out, "ring {}", p.ring());
    let _ = writeln!(out, "weights {lo}..{hi}");
    if let Some(c) = p.degree_cap() {
        let _ = writeln!(out, "degcap {c}");
    }
    for (i, b) in p.basis().iter().enumerate() {
        if p.is_unit(i) {
            let _ = writeln!(out, "object {}", p.objects()[b.source]);
        } else {
            let objs = p.objects();
            let _ = writeln!(out, "gen {} : {} -> {} deg {} wt {}", b.name, objs[b.source], objs[b.target], b.degree, b.weight);
        }
        if !b.order.is_zero() {
            let _ = writeln!(out, "order {} {}", b.name, b.order);
        }
    }
    for (i, b) in p.basis().iter().enumerate() {
        let d = p.differential(i);
        if !d.is_zero() {
            let _ = writeln!(out, "d {} = {}", b.name, p.display_lin(d));
        }
    }
    for (&(g, f), v) in p.products() {
        let _ = writeln!(out, "mul {}*{} = {}", p.morphism(g).name, p.morphism(f).name, p.display_lin(v));
    }
    out
}
