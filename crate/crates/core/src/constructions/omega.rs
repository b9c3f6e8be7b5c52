//! Standard realizations of `{1^a, y^c}` with the fewest possible 1-edges.

use super::certificate::{Certificate, Realization};
use super::grid::{guided_sweep, Sweep};
use crate::error::{pre, Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::PathSeq;
use serde::{Deserialize, Serialize};

/// The three sweep shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    /// Classes `0, 1, ..., y-1`.
    H1,
    /// Classes `0, y-1, ..., 1`.
    H2,
    /// `H2` with a tail curl on classes 2 and 1; one extra 1-edge.
    H3,
}

impl Pattern {
    pub fn name(self) -> &'static str {
        match self {
            Pattern::H1 => "h1",
            Pattern::H2 => "h2",
            Pattern::H3 => "h3",
        }
    }

    /// 1-edges used for modulus `y`.
    pub fn ones(self, y: usize) -> usize {
        match self {
            Pattern::H3 => y,
            _ => y - 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaCase {
    pub y: usize,
    pub c: usize,
    pub qprime: usize,
    pub rprime: usize,
    /// Least `a` admitting a standard realization of `{1^a, y^c}`.
    pub value: usize,
    /// Preferred pattern attaining `value`.
    pub pattern: Pattern,
}

fn h1_works(rp: usize) -> bool {
    rp % 2 == 0
}

fn h2_works(y: usize, qp: usize, rp: usize) -> bool {
    qp == 0 || rp == 1 || (rp > 0 && (y - rp) % 2 == 1)
}

fn h3_works(y: usize, qp: usize, rp: usize) -> bool {
    y >= 3 && qp > 0 && rp % 2 == 1 && rp != 1
}

pub fn omega_value(y: usize, c: usize) -> Result<OmegaCase> {
    if y < 2 || c == 0 {
        return pre(format!("omega needs y >= 2 and c > 0, got y={y}, c={c}"));
    }
    let (qprime, rprime) = (c / y, c % y);
    let tight = qprime == 0 || rprime == 1 || y % 2 == 0 || rprime % 2 == 0;
    let (value, pattern) = if !tight {
        (y, Pattern::H3)
    } else if h2_works(y, qprime, rprime) {
        (y - 1, Pattern::H2)
    } else {
        (y - 1, Pattern::H1)
    };
    Ok(OmegaCase { y, c, qprime, rprime, value, pattern })
}

/// `ω(y, c)`, with `ω(y, 0) = 0`.
pub fn omega(y: usize, c: usize) -> usize {
    if c == 0 {
        0
    } else {
        omega_value(y, c).map(|o| o.value).unwrap_or(usize::MAX)
    }
}

/// Builds one pattern for `{1^*, y^c}`; fails if that pattern does not fit.
pub fn pattern_path(y: usize, c: usize, pattern: Pattern) -> Result<PathSeq> {
    let case = omega_value(y, c)?;
    let (qp, rp) = (case.qprime, case.rprime);
    let fits = match pattern {
        Pattern::H1 => h1_works(rp),
        Pattern::H2 => h2_works(y, qp, rp),
        Pattern::H3 => h3_works(y, qp, rp),
    };
    if !fits {
        return Err(Error::Unavailable(format!("{} does not fit y={y}, c={c}", pattern.name())));
    }
    let guide: Vec<usize> = (0..y).collect();
    let v = c + pattern.ones(y) + 1;
    let path = match pattern {
        Pattern::H1 => guided_sweep(v, &guide, Sweep::Forward, false)?,
        Pattern::H2 => guided_sweep(v, &guide, Sweep::Backward, false)?,
        Pattern::H3 => guided_sweep(v, &guide, Sweep::Backward, true)?,
    };
    let target = EdgeMultiset::from_pairs([(1, pattern.ones(y)), (y, c)]);
    super::certificate::post_verify(&format!("omega-{}", pattern.name()), &path, &target, crate::Mode::Linear)?;
    Ok(path)
}

/// The preferred ω-construction for `{1^ω(y,c), y^c}`.
pub fn omega_realization(y: usize, c: usize) -> Result<Realization> {
    let case = omega_value(y, c)?;
    let path = pattern_path(y, c, case.pattern)?;
    let target = EdgeMultiset::from_pairs([(1, case.value), (y, c)]);
    let cert = Certificate::constructive(&format!("omega-{}", case.pattern.name()))
        .with("y", y)
        .with("c", c);
    Realization::checked(path, target, cert)
}

/// Every pattern that realizes `{1^*, y^c}`, with its number of 1-edges.
pub fn omega_patterns(y: usize, c: usize) -> Vec<(Pattern, PathSeq)> {
    [Pattern::H2, Pattern::H1, Pattern::H3]
        .into_iter()
        .filter_map(|p| pattern_path(y, c, p).ok().map(|path| (p, path)))
        .collect()
}
