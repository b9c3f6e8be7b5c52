//! Perfect realizations with support `{1, x}` for even `x`: the usual
//! sweep ends low in its last class, so the last two classes are climbed
//! together instead, hopping between them with 1-edges.

use super::certificate::{Certificate, Realization};
use crate::error::{pre, Result};
use crate::multiset::EdgeMultiset;
use crate::path::PathSeq;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PerfectVariant {
    /// `v = (2s+1)x - 1`: forward sweep, then classes `x-2, x-1` zig-zag.
    A,
    /// `v = (2s+1)x + 2`: class 0, classes `x-1..3` down, then `2, 1` zig-zag.
    B,
}

/// Two adjacent classes climbed together from row 0, starting in `first`
/// and switching class on every row.
fn zigzag(x: usize, v: usize, first: usize, second: usize, out: &mut Vec<usize>) {
    let mut row = 0;
    loop {
        let (p, q) = if row % 2 == 0 { (first, second) } else { (second, first) };
        for k in [p, q] {
            let u = row * x + k;
            if u < v {
                out.push(u);
            }
        }
        row += 1;
        if row * x + first.min(second) >= v {
            break;
        }
    }
}

pub fn perfect_even_x(x: usize, s: usize, variant: PerfectVariant) -> Result<Realization> {
    if x < 2 || x % 2 == 1 {
        return pre(format!("modulus {x} must be even"));
    }
    let mut vertices = Vec::new();
    let v = match variant {
        PerfectVariant::A => {
            if s == 0 {
                return pre("variant A needs s >= 1");
            }
            let v = (2 * s + 1) * x - 1;
            for k in 0..x - 2 {
                let rows = (0..=2 * s).map(|r| r * x + k);
                if k % 2 == 0 {
                    vertices.extend(rows);
                } else {
                    vertices.extend(rows.rev());
                }
            }
            zigzag(x, v, x - 2, x - 1, &mut vertices);
            v
        }
        PerfectVariant::B => {
            if x < 4 {
                return pre("variant B needs x >= 4");
            }
            let v = (2 * s + 1) * x + 2;
            vertices.extend((0..=2 * s + 1).map(|r| r * x));
            for (i, k) in (3..x).rev().enumerate() {
                let rows = (0..=2 * s).map(|r| r * x + k);
                if i % 2 == 0 {
                    vertices.extend(rows.rev());
                } else {
                    vertices.extend(rows);
                }
            }
            zigzag(x, v, 2, 1, &mut vertices);
            v
        }
    };
    let path = PathSeq::new(v, vertices)?;
    let b = 2 * s * (x - 1) + if variant == PerfectVariant::B { 2 } else { 0 };
    let target = EdgeMultiset::from_pairs([(1, v - 1 - b), (x, b)]);
    let cert = Certificate::constructive("perfect-even-x")
        .with("x", x)
        .with("s", s)
        .with("variant", format!("{variant:?}"));
    let r = Realization::checked(path, target, cert)?;
    if !r.path.is_perfect() {
        return Err(crate::Error::Structural("zig-zag did not end on v - 1".into()));
    }
    Ok(r)
}
