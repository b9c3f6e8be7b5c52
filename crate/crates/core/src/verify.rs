//! Independent checking of candidate realizations. Deliberately recomputes
//! everything from the raw vertex list instead of reusing path helpers.

use crate::error::{Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{Mode, PathSeq};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_path: bool,
    pub is_hamiltonian: bool,
    pub is_standard: bool,
    pub is_perfect: bool,
    pub realized: EdgeMultiset,
    pub matches_target: bool,
    /// `(length, expected count, actual count)` at the smallest differing length.
    pub first_mismatch: Option<(usize, usize, usize)>,
}

/// Structural flags only; `realized` holds the linear lengths when the
/// sequence is a path.
pub fn classify(path: &PathSeq) -> VerificationReport {
    let v = path.v;
    let n = path.vertices.len();
    let mut seen = vec![false; v];
    let mut is_path = v > 0 && n > 0;
    for &p in &path.vertices {
        if p >= v || seen[p] {
            is_path = false;
            break;
        }
        seen[p] = true;
    }
    let is_hamiltonian = is_path && n == v;
    let is_standard = is_hamiltonian && path.vertices[0] == 0;
    let is_perfect = is_standard && path.vertices[n - 1] == v - 1;
    let realized = if is_path { measure(path, Mode::Linear) } else { EdgeMultiset::new() };
    VerificationReport {
        is_path,
        is_hamiltonian,
        is_standard,
        is_perfect,
        realized,
        matches_target: false,
        first_mismatch: None,
    }
}

fn measure(path: &PathSeq, mode: Mode) -> EdgeMultiset {
    let v = path.v as i64;
    let mut out = EdgeMultiset::new();
    for pair in path.vertices.windows(2) {
        let d = (pair[1] as i64 - pair[0] as i64).abs();
        let d = match mode {
            Mode::Linear => d,
            Mode::Cyclic => d.min(v - d),
        };
        if d > 0 {
            out.add(d as usize, 1);
        }
    }
    out
}

/// Checks that `path` is a Hamiltonian path realizing `target` under `mode`.
pub fn verify(path: &PathSeq, target: &EdgeMultiset, mode: Mode) -> VerificationReport {
    let mut report = classify(path);
    if !report.is_path {
        report.first_mismatch = target.iter().next().map(|(l, c)| (l, c, 0));
        return report;
    }
    report.realized = measure(path, mode);
    let mut lens: Vec<usize> = target.support();
    lens.extend(report.realized.support());
    lens.sort_unstable();
    lens.dedup();
    report.first_mismatch = lens
        .into_iter()
        .map(|l| (l, target.count(l), report.realized.count(l)))
        .find(|&(_, e, a)| e != a);
    report.matches_target = report.is_hamiltonian && report.first_mismatch.is_none();
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Admissibility {
    /// For every divisor `d` of `v`, at most `v - d` lengths are multiples of `d`.
    pub admissible: bool,
    /// Admissible and every length is coprime to `v`.
    pub strongly_admissible: bool,
    /// `c = 0` or `a + b >= y - 1`; `None` unless the support is `{1, x, y}`
    /// or a subset of it containing 1.
    pub hop_feasible: Option<bool>,
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn admissibility(l: &EdgeMultiset, v: usize) -> Result<Admissibility> {
    if v == 0 || l.size() != v - 1 {
        return Err(Error::SizeMismatch { size: l.size(), expected: v.saturating_sub(1) });
    }
    if let Some(m) = l.max_len() {
        if m > v / 2 {
            return Err(Error::Precondition(format!("length {m} exceeds floor(v/2) = {}", v / 2)));
        }
    }
    let admissible = (2..=v).filter(|d| v % d == 0).all(|d| {
        let multiples: usize = l.iter().filter(|(len, _)| len % d == 0).map(|(_, c)| c).sum();
        multiples <= v - d
    });
    let strongly_admissible = admissible && l.iter().all(|(len, _)| gcd(len, v) == 1);
    let support = l.support();
    let hop_feasible = if support.len() <= 3 && support.first() == Some(&1) {
        let y = *support.last().unwrap();
        let c = l.count(y);
        Some(y == 1 || c == 0 || (v - 1 - c) + 1 >= y)
    } else if support.is_empty() {
        Some(true)
    } else {
        None
    };
    Ok(Admissibility { admissible, strongly_admissible, hop_feasible })
}
