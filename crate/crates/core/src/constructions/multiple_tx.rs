//! `{1^a, x^b, (tx)^c}` for odd `x`: take an ω-construction with support
//! `{1, x}` and convert exactly `c` of its x-edges into (tx)-edges by
//! substituting scaled `{1, t}` realizations into its fauxset runs.

use super::certificate::{Certificate, Realization};
use super::library::{perfect_1x, perfect_min_ones, standard_1x};
use super::omega::{omega, omega_patterns};
use super::substitute::{substitute_fauxset, SubstitutionKind};
use crate::error::{pre, Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{with_ones, PathSeq};

/// Which published sufficient conditions hold for an instance.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TxHypotheses {
    pub general: bool,
    pub even_r: bool,
    pub odd_r_odd_t: bool,
    pub odd_r_even_t: bool,
    pub x3: bool,
}

impl TxHypotheses {
    pub fn any(&self) -> bool {
        self.general || self.even_r || self.odd_r_odd_t || self.odd_r_even_t || self.x3
    }

    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.even_r, "even-r"),
            (self.odd_r_odd_t, "odd-r-odd-t"),
            (self.odd_r_even_t, "odd-r-even-t"),
            (self.general, "general"),
            (self.x3, "x3"),
        ]
        .into_iter()
        .filter_map(|(h, n)| h.then_some(n))
        .collect()
    }
}

pub fn tx_hypotheses(x: usize, t: usize, a: usize, b: usize, c: usize) -> TxHypotheses {
    let v = a + b + c + 1;
    if x % 2 == 0 || t < 2 || v < (t + 2) * x || a < omega(x, b + c) {
        return TxHypotheses::default();
    }
    let (q, r) = (v / x, v % x);
    let s = q / (2 * t);
    let tx = t * x;
    TxHypotheses {
        general: b + 2 * t >= 2 * q + tx + 1,
        even_r: r % 2 == 0 && b >= tx,
        odd_r_odd_t: r % 2 == 1 && t % 2 == 1 && b + 3 >= tx + 2 * t,
        odd_r_even_t: r % 2 == 1 && t % 2 == 0 && b + 9 >= 4 * s + tx + 4 * t,
        x3: x == 3 && a >= 2 && ((r % 2 == 0 && b >= 3 * t) || (r % 2 == 1 && b > 3 * t)),
    }
}

/// A maximal run of equal x-steps: vertex indices `start..=start + w`.
#[derive(Debug, Clone, Copy)]
struct Run {
    start: usize,
    w: usize,
    dir: i64,
}

fn runs(path: &PathSeq, x: usize) -> Vec<Run> {
    let vs = &path.vertices;
    let mut out: Vec<Run> = Vec::new();
    for i in 0..vs.len().saturating_sub(1) {
        let d = vs[i + 1] as i64 - vs[i] as i64;
        if d.unsigned_abs() as usize != x {
            continue;
        }
        match out.last_mut() {
            Some(r) if r.start + r.w == i && r.dir == d.signum() => r.w += 1,
            _ => out.push(Run { start: i, w: 1, dir: d.signum() }),
        }
    }
    out
}

#[derive(Debug, Clone, Copy)]
enum Move {
    Skip,
    Internal(usize, usize),
    Terminal(usize, usize),
    Pair(usize, usize),
}

fn std_len(t: usize, beta: usize) -> usize {
    beta + omega(t, beta)
}

fn perf_len(t: usize, beta: usize) -> Option<usize> {
    perfect_min_ones(t, beta).map(|o| o + beta)
}

/// Chooses substitutions converting exactly `c` x-edges.
fn plan(host: &PathSeq, x: usize, t: usize, c: usize) -> Option<Vec<Move>> {
    let rs = runs(host, x);
    let n = rs.len();
    let last = host.len() - 1;
    // reach[i][k]: some choice for runs < i converts exactly k edges.
    let mut reach: Vec<Vec<Option<(usize, Move)>>> = vec![vec![None; c + 1]; n + 1];
    reach[0][0] = Some((0, Move::Skip));
    for i in 0..n {
        let r = rs[i];
        let mut single: Vec<Move> = vec![Move::Skip];
        for beta in 1..=r.w.min(c) {
            if let Some(len) = perf_len(t, beta).filter(|&l| l <= r.w) {
                single.push(Move::Internal(beta, len));
            } else if r.start + r.w == last && std_len(t, beta) <= r.w {
                single.push(Move::Terminal(beta, std_len(t, beta)));
            }
        }
        let mut pair: Vec<Move> = Vec::new();
        if i + 1 < n {
            let s = rs[i + 1];
            if r.start + r.w + 1 == s.start && r.dir == -s.dir {
                let w = r.w.min(s.w);
                for beta in 1..=w.min(c / 2) {
                    if std_len(t, beta) <= w {
                        pair.push(Move::Pair(beta, std_len(t, beta)));
                    }
                }
            }
        }
        for k in 0..=c {
            if reach[i][k].is_none() {
                continue;
            }
            for &m in &single {
                let add = match m {
                    Move::Skip => 0,
                    Move::Internal(b, _) | Move::Terminal(b, _) => b,
                    Move::Pair(..) => unreachable!(),
                };
                if k + add <= c && reach[i + 1][k + add].is_none() {
                    reach[i + 1][k + add] = Some((k, m));
                }
            }
            for &m in &pair {
                let Move::Pair(b, _) = m else { continue };
                if k + 2 * b <= c && reach[i + 2][k + 2 * b].is_none() {
                    reach[i + 2][k + 2 * b] = Some((k, m));
                }
            }
        }
    }
    reach[n][c]?;
    let mut moves = vec![Move::Skip; n];
    let (mut i, mut k) = (n, c);
    while i > 0 {
        let (prev, m) = reach[i][k]?;
        if let Move::Pair(..) = m {
            moves[i - 2] = m;
            i -= 2;
        } else {
            moves[i - 1] = m;
            i -= 1;
        }
        k = prev;
    }
    Some(moves)
}

fn apply(host: &PathSeq, x: usize, t: usize, moves: &[Move]) -> Result<PathSeq> {
    let rs = runs(host, x);
    let mut path = host.clone();
    for (r, m) in rs.iter().zip(moves) {
        let missing = || Error::Unavailable("replacement realization".into());
        path = match *m {
            Move::Skip => continue,
            Move::Internal(beta, len) => {
                let m = perfect_1x(t, len - beta, beta).ok_or_else(missing)?;
                substitute_fauxset(&path, x, r.start, &m, SubstitutionKind::Internal)?
            }
            Move::Terminal(beta, len) => {
                let m = standard_1x(t, len - beta, beta).ok_or_else(missing)?;
                substitute_fauxset(&path, x, r.start + r.w - len, &m, SubstitutionKind::Terminal)?
            }
            Move::Pair(beta, len) => {
                let m = standard_1x(t, len - beta, beta).ok_or_else(missing)?;
                substitute_fauxset(&path, x, r.start + r.w - len, &m, SubstitutionKind::Pair)?
            }
        };
    }
    Ok(path)
}

/// Builds a standard realization of `{1^a, x^b, (tx)^c}` by substitution.
/// Succeeds whenever some ω-host admits exactly `c` conversions; the
/// certificate lists which published hypotheses the instance meets.
pub fn multiple_tx(x: usize, t: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if x % 2 == 0 || x < 3 {
        return pre(format!("x = {x} must be odd and at least 3"));
    }
    if t < 2 {
        return pre("t must be at least 2");
    }
    if c == 0 {
        return pre("c must be positive");
    }
    if a < omega(x, b + c) {
        return pre(format!("a = {a} is below ω({x}, {}) = {}", b + c, omega(x, b + c)));
    }
    let target = EdgeMultiset::triple(x, t * x, a, b, c);
    let hyps = tx_hypotheses(x, t, a, b, c);
    // Hosts come in the ω preference order h2, h1, h3.
    for (pattern, host) in omega_patterns(x, b + c) {
        let ones = pattern.ones(x);
        if ones > a {
            continue;
        }
        let Some(moves) = plan(&host, x, t, c) else { continue };
        let Ok(path) = apply(&host, x, t, &moves).and_then(|p| with_ones(&p, a - ones)) else { continue };
        let cert = Certificate::constructive("multiple-tx")
            .with("host", format!("omega-{} {{1^{ones},{x}^{}}}", pattern.name(), b + c))
            .with("t", t)
            .with("hypotheses", hyps.names().join(","));
        return Realization::checked(path, target, cert);
    }
    Err(Error::Unavailable(format!("no ω-host admits {c} conversions for {target}")))
}
