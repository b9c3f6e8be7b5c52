//! Replacing x-steps inside a path by a scaled copy of a `{1, t}`
//! realization, which turns some x-edges into (tx)-edges.

use crate::error::{pre, Error, Result};
use crate::path::PathSeq;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubstitutionKind {
    /// The run ends the path; `M` need only be standard.
    Terminal,
    /// Two equal runs either side of one bridge edge, moving in opposite
    /// directions; `M` standard, used once on each side.
    Pair,
    /// Any run; `M` must be perfect so both ends stay put.
    Internal,
}

/// Direction (+1/-1) of the x-step run of `w` edges starting at `start`.
fn run_direction(host: &PathSeq, x: usize, start: usize, w: usize) -> Result<i64> {
    let vs = &host.vertices;
    if w == 0 || start + w >= vs.len() {
        return Err(Error::Structural(format!("no run of {w} edges at index {start}")));
    }
    let d = vs[start + 1] as i64 - vs[start] as i64;
    if d.unsigned_abs() as usize != x {
        return Err(Error::Structural(format!("index {start} does not start an {x}-step run")));
    }
    if vs[start..=start + w].windows(2).any(|p| p[1] as i64 - p[0] as i64 != d) {
        return Err(Error::Structural(format!("indices {start}..={} are not an in-order run", start + w)));
    }
    Ok(d.signum())
}

fn place(base: usize, dir: i64, x: usize, m: &PathSeq) -> Vec<usize> {
    m.vertices.iter().map(|&j| (base as i64 + dir * (x * j) as i64) as usize).collect()
}

/// Rewrites the run of `m.len() - 1` edges beginning at index `start` of
/// `host` (and, for [`SubstitutionKind::Pair`], the equal run right after
/// it) using `x · m`.
pub fn substitute_fauxset(
    host: &PathSeq,
    x: usize,
    start: usize,
    m: &PathSeq,
    kind: SubstitutionKind,
) -> Result<PathSeq> {
    if !m.is_standard() {
        return pre("replacement must be a standard linear realization");
    }
    let w = m.len() - 1;
    if w == 0 {
        return Ok(host.clone());
    }
    if kind == SubstitutionKind::Internal && !m.is_perfect() {
        return pre("internal substitution needs a perfect replacement");
    }
    let d = run_direction(host, x, start, w)?;
    let mut out = host.vertices.clone();
    match kind {
        SubstitutionKind::Terminal => {
            if start + w != out.len() - 1 {
                return Err(Error::Structural("terminal run does not end the path".into()));
            }
            out.splice(start..=start + w, place(host.vertices[start], d, x, m));
        }
        SubstitutionKind::Internal => {
            out.splice(start..=start + w, place(host.vertices[start], d, x, m));
        }
        SubstitutionKind::Pair => {
            let second = start + w + 1;
            let d2 = run_direction(host, x, second, w)?;
            if d2 != -d {
                return Err(Error::Structural("paired runs must move in opposite directions".into()));
            }
            out.splice(start..=start + w, place(host.vertices[start], d, x, m));
            let mut tail = place(host.vertices[second + w], d, x, m);
            tail.reverse();
            out.splice(second..=second + w, tail);
        }
    }
    PathSeq::new(host.v, out)
}
