//! Residue-class sweeps: the grid pictures of the constructions, flattened.

use crate::error::{pre, Error, Result};
use crate::fauxset::top_row;
use crate::path::PathSeq;
use serde::{Deserialize, Serialize};

/// A run of one residue class between two rows, inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub class: usize,
    pub lo: usize,
    pub hi: usize,
    pub descending: bool,
}

/// Concatenates segments and checks the result is a Hamiltonian path.
/// Edge lengths are left to the caller's post-verification.
pub fn assemble(v: usize, m: usize, segments: &[Segment]) -> Result<PathSeq> {
    let mut vertices = Vec::with_capacity(v);
    for s in segments {
        let top = top_row(m, s.class, v);
        if s.hi > top {
            return Err(Error::OutOfClass { class: s.class, hi: s.hi, qstar: top });
        }
        let rows: Box<dyn Iterator<Item = usize>> =
            if s.descending { Box::new((s.lo..=s.hi).rev()) } else { Box::new(s.lo..=s.hi) };
        vertices.extend(rows.map(|r| r * m + s.class));
    }
    let path = PathSeq::new(v, vertices)?;
    if !path.is_hamiltonian() {
        return Err(Error::Structural(format!("sweep covers {} of {v} vertices", path.len())));
    }
    Ok(path)
}

/// Order in which a guide visits the classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sweep {
    /// Classes in guide order.
    Forward,
    /// Class 0 first, then `m - h` for the remaining guide entries `h`.
    Backward,
}

/// Visits every residue class modulo `m` (where `m` is the guide length),
/// alternating up and down, in the order the guide dictates. With `curl`
/// the last two classes A, B become: A's entry vertex, all of B, then the
/// rest of A, which repeats the final guide step.
pub fn guided_sweep(v: usize, guide: &[usize], sweep: Sweep, curl: bool) -> Result<PathSeq> {
    let m = guide.len();
    if m < 2 || v < m {
        return pre(format!("guide of length {m} cannot steer a sweep on {v} vertices"));
    }
    let mut seen = vec![false; m];
    for &g in guide {
        if g >= m || std::mem::replace(&mut seen[g], true) {
            return pre("guide is not a permutation of its index range");
        }
    }
    if guide[0] != 0 {
        return pre("guide must start at 0");
    }
    let order: Vec<usize> = match sweep {
        Sweep::Forward => guide.to_vec(),
        Sweep::Backward => std::iter::once(0).chain(guide[1..].iter().map(|&h| m - h)).collect(),
    };
    // A class is entered at whichever end the walk currently sits: after an
    // ascending run of two or more rows we are at the top, otherwise at row 0.
    let mut at_top = false;
    let mut segments: Vec<Segment> = Vec::with_capacity(m + 1);
    let body = if curl { m - 2 } else { m };
    for &class in order.iter().take(body) {
        let hi = top_row(m, class, v);
        segments.push(Segment { class, lo: 0, hi, descending: at_top });
        at_top = !at_top && hi > 0;
    }
    if curl {
        let (a, b) = (order[m - 2], order[m - 1]);
        let top_a = top_row(m, a, v);
        if top_a == 0 {
            return pre("tail curl needs at least two rows in the curled class");
        }
        let b_seg = Segment { class: b, lo: 0, hi: top_row(m, b, v), descending: at_top };
        if at_top {
            segments.push(Segment { class: a, lo: top_a, hi: top_a, descending: false });
            segments.push(b_seg);
            segments.push(Segment { class: a, lo: 0, hi: top_a - 1, descending: false });
        } else {
            segments.push(Segment { class: a, lo: 0, hi: 0, descending: false });
            segments.push(b_seg);
            segments.push(Segment { class: a, lo: 1, hi: top_a, descending: true });
        }
    }
    assemble(v, m, &segments)
}
