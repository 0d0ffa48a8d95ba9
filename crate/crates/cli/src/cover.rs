//! Cover files and the built-in covers.
//!
//! ```text
//! ring Q
//! weights -3..3
//! patch U a1x
//! patch V a1y
//! inter U V laurent
//! ```
//!
//! Patch kinds are `a1x`, `a1y`, `laurent` and `zero`. Every intersection of two or
//! more patches needs an `inter` line.

use std::collections::{BTreeMap, BTreeSet};

use mixhom::exactlin::RingSpec;
use mixhom::scheme::{affine_line, affine_line_bar, cover_from_kinds, projective_line, CechCoverData, PatchKind};

use crate::format::{parse_range, InputError};

/// Weights used when neither the command line nor the cover file gives any.
pub const DEFAULT_WEIGHTS: (i64, i64) = (-3, 3);

fn schema(message: impl Into<String>) -> InputError {
    InputError::Schema { section: "cover".into(), message: message.into() }
}

/// Patch complexes are built far enough for Čech degrees up to `top` on a cover with
/// `patches` patches.
pub fn needed_cap(top: i64, patches: usize) -> i64 {
    (top + patches as i64 - 1).max(0)
}

/// Resolves `p1`, `a1`, `a1-bar` or a cover file, built for total degrees up to `top`.
/// `ring` and `weights` override what the file says.
pub fn load_cover(spec: &str, ring: Option<RingSpec>, weights: Option<(i64, i64)>, top: i64) -> Result<CechCoverData, InputError> {
    let ws = |w: (i64, i64)| -> BTreeSet<i64> { (w.0..=w.1).collect() };
    let builtin_ring = || ring.clone().ok_or_else(|| schema(format!("cover `{spec}` needs --ring")));
    match spec {
        "p1" => Ok(projective_line(&builtin_ring()?, &ws(weights.unwrap_or(DEFAULT_WEIGHTS)), needed_cap(top, 2))),
        "a1" => Ok(affine_line(&builtin_ring()?, &ws(weights.unwrap_or((0, DEFAULT_WEIGHTS.1))), needed_cap(top, 1))),
        "a1-bar" => affine_line_bar(&builtin_ring()?, &ws(weights.unwrap_or((0, DEFAULT_WEIGHTS.1))), needed_cap(top, 1))
            .map_err(|e| schema(e.to_string())),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| InputError::Io(format!("{path}: {e}")))?;
            parse_cover(&text, ring, weights, top)
        }
    }
}

pub fn parse_cover(text: &str, ring: Option<RingSpec>, weights: Option<(i64, i64)>, top: i64) -> Result<CechCoverData, InputError> {
    let mut file_ring = None;
    let mut file_weights = None;
    let mut patches: Vec<(String, PatchKind)> = Vec::new();
    let mut inter: BTreeMap<Vec<usize>, PatchKind> = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |message: String| InputError::Parse { line, column: 1, message };
        let words: Vec<&str> = body.split_whitespace().collect();
        match words[0] {
            "ring" if words.len() == 2 => file_ring = Some(words[1].parse::<RingSpec>().map_err(|e| err(e.to_string()))?),
            "weights" if words.len() == 2 => {
                file_weights = Some(parse_range(words[1]).ok_or_else(|| err(format!("expected `a..b`, found `{}`", words[1])))?)
            }
            "patch" if words.len() == 3 => {
                if patches.iter().any(|(n, _)| n == words[1]) {
                    return Err(schema(format!("duplicate patch `{}`", words[1])));
                }
                let kind: PatchKind = words[2].parse().map_err(|e: String| err(e))?;
                patches.push((words[1].to_string(), kind));
            }
            "inter" if words.len() >= 4 => {
                let kind: PatchKind = words[words.len() - 1].parse().map_err(|e: String| err(e))?;
                let mut idx = Vec::new();
                for n in &words[1..words.len() - 1] {
                    idx.push(patches.iter().position(|(p, _)| p == n).ok_or_else(|| schema(format!("unknown patch `{n}`")))?);
                }
                idx.sort_unstable();
                idx.dedup();
                inter.insert(idx, kind);
            }
            _ => return Err(err(format!("cannot read `{body}`"))),
        }
    }
    if patches.is_empty() {
        return Err(schema("no patches"));
    }
    if patches.len() > 8 {
        return Err(schema("at most eight patches are supported"));
    }
    let ring = ring.or(file_ring).ok_or_else(|| schema("no ring given"))?;
    let (lo, hi) = weights.or(file_weights).unwrap_or(DEFAULT_WEIGHTS);
    cover_from_kinds(&ring, &patches, &inter, &(lo..=hi).collect(), needed_cap(top, patches.len())).map_err(|e| schema(e.to_string()))
}
