//! Guides made of a perfect and a standard `{1, x}` realization sharing a
//! vertex, swept across `y + c` vertices (optionally with a tail curl), and
//! a search over all such configurations followed by concatenation with the
//! leftover short edges.

use super::certificate::{Certificate, Realization};
use super::grid::{guided_sweep, Sweep};
use super::library::{perfect_1x, perfect_min_ones, standard_1x, standard_1x_candidates};
use super::omega::omega;
use crate::error::{pre, Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{chain, concatenate, Mode};
use serde::{Deserialize, Serialize};

/// `{1^a1, x^b1}` (perfect, on `v1` vertices) followed by `{1^a2, x^b2}`
/// (standard, on `v2` vertices), with `v1 + v2 = y + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SharedSplit {
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
}

impl SharedSplit {
    pub fn v1(&self) -> usize {
        self.a1 + self.b1 + 1
    }

    pub fn v2(&self) -> usize {
        self.a2 + self.b2 + 1
    }
}

fn direction(y: usize, v: usize, v1: usize, v2: usize) -> Option<Sweep> {
    if v1 % 2 == 0 && v % y == v1 % y {
        Some(Sweep::Forward)
    } else if v1 % 2 == 1 && v % y == (v2 + 1) % y {
        Some(Sweep::Backward)
    } else {
        None
    }
}

/// Builds the swept realization of `{1^(a1+a2), x^(b1+b2), y^c}` plus, with
/// `curl`, one more copy of the guide's final edge `z` (restricted to `want_z`
/// when given).
pub fn shared_fauxset_with(
    x: usize,
    y: usize,
    split: SharedSplit,
    c: usize,
    curl: bool,
    want_z: Option<usize>,
) -> Result<Realization> {
    if !(1 < x && x < y) {
        return pre(format!("need 1 < x < y, got x={x}, y={y}"));
    }
    let (v1, v2) = (split.v1(), split.v2());
    if v1 + v2 != y + 1 {
        return pre(format!("parts have {v1} + {v2} vertices; need y + 1 = {}", y + 1));
    }
    let v = y + c + usize::from(curl);
    let sweep = direction(y, v, v1, v2)
        .ok_or_else(|| Error::Precondition(format!("v = {v} is not compatible with v1 = {v1}")))?;
    let g1 = perfect_1x(x, split.a1, split.b1)
        .ok_or_else(|| Error::Unavailable(format!("no perfect {{1^{},{x}^{}}}", split.a1, split.b1)))?;
    let mut last_err = Error::Unavailable("no standard part".into());
    for g2 in standard_1x_candidates(x, split.a2, split.b2) {
        let h = chain(&g1, &g2)?;
        let z = h.diffs(Mode::Linear).last().copied().unwrap_or(0);
        if curl && want_z.is_some_and(|w| w != z) {
            continue;
        }
        let mut target = EdgeMultiset::triple(x, y, split.a1 + split.a2, split.b1 + split.b2, c);
        if curl {
            target.add(z, 1);
        }
        let cert = Certificate::constructive("shared-fauxset")
            .with("guide", format!("{:?}", h.vertices))
            .with("sweep", format!("{sweep:?}").to_lowercase())
            .with("curl", curl);
        match guided_sweep(v, &h.vertices, sweep, curl)
            .and_then(|path| Realization::checked(path, target, cert))
        {
            Ok(r) => return Ok(r),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

pub fn shared_fauxset(x: usize, y: usize, split: SharedSplit, c: usize, curl: bool) -> Result<Realization> {
    shared_fauxset_with(x, y, split, c, curl, None)
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    split: SharedSplit,
    curl: bool,
    z: usize,
    ones: usize,
}

fn candidates(x: usize, y: usize, a: usize, b: usize, c: usize) -> Vec<Candidate> {
    let v = a + b + c + 1;
    let mut out = Vec::new();
    for curl in [false, true] {
        let vs = y + c + usize::from(curl);
        if vs > v {
            continue;
        }
        let r = vs % y;
        let mut v1s = Vec::new();
        let forward = if r == 0 { y } else { r };
        if forward % 2 == 0 {
            v1s.push(forward);
        }
        let v2 = if r == 0 { y - 1 } else if r == 1 { y } else { r - 1 };
        if (y + 1 - v2) % 2 == 1 {
            v1s.push(y + 1 - v2);
        }
        for v1 in v1s {
            let v2 = y + 1 - v1;
            for b1 in 0..v1 {
                let a1 = v1 - 1 - b1;
                if perfect_min_ones(x, b1).map_or(true, |m| m > a1) {
                    continue;
                }
                for b2 in 0..v2 {
                    let a2 = v2 - 1 - b2;
                    if b2 > 0 && a2 < omega(x, b2) {
                        continue;
                    }
                    let zs: &[usize] = if curl { &[1, x] } else { &[0] };
                    for &z in zs {
                        let sa = a1 + a2 + usize::from(z == 1);
                        let sb = b1 + b2 + usize::from(z == x);
                        let (Some(ra), Some(rb)) = (a.checked_sub(sa), b.checked_sub(sb)) else { continue };
                        if rb > 0 && ra < omega(x, rb) {
                            continue;
                        }
                        let split = SharedSplit { a1, b1, a2, b2 };
                        out.push(Candidate { split, curl, z, ones: sa });
                    }
                }
            }
        }
    }
    out.sort_by_key(|k| (k.ones, k.curl, std::cmp::Reverse(k.split.b1)));
    out
}

/// Searches guide splits, sweep orders and curls for `{1^a, x^b, y^c}`,
/// concatenating the swept part with a standard realization of the
/// leftover short edges. Every result is verified.
pub fn shared_search(x: usize, y: usize, a: usize, b: usize, c: usize, rule: &str) -> Result<Realization> {
    if !(1 < x && x < y) || c == 0 {
        return pre("shared search needs 1 < x < y and c > 0");
    }
    let target = EdgeMultiset::triple(x, y, a, b, c);
    for cand in candidates(x, y, a, b, c).into_iter().take(256) {
        let want_z = cand.curl.then_some(cand.z);
        let Ok(s) = shared_fauxset_with(x, y, cand.split, c, cand.curl, want_z) else { continue };
        let (ra, rb) = (a - s.target.count(1), b - s.target.count(x));
        let path = if ra + rb == 0 {
            s.path
        } else {
            let Some(rest) = standard_1x(x, ra, rb) else { continue };
            match concatenate(&s.path, &rest, 0) {
                Ok(p) => p,
                Err(_) => continue,
            }
        };
        let mut cert = s.certificate;
        cert.rule = rule.into();
        let cert = cert.with("split", format!("{:?}", cand.split)).with("rest", format!("{{1^{ra},{x}^{rb}}}"));
        if let Ok(r) = Realization::checked(path, target.clone(), cert) {
            return Ok(r);
        }
    }
    Err(Error::Unavailable(format!("no shared-fauxset configuration realizes {target}")))
}

/// Whether the odd-`x` hypotheses hold.
pub fn odd_x_applies(x: usize, y: usize, a: usize, b: usize) -> bool {
    x % 2 == 1
        && y + 2 > 2 * x
        && ((a + 3 >= 4 * x && b + 2 * x >= y + 2) || (x == 3 && a >= 7 && b + 4 >= y))
}

/// Linear realization of `{1^a, x^b, y^c}` for odd `x`, `y > 2x - 2`, with
/// `a ≥ 4x - 3` and `b ≥ y - 2x + 2` (or, for `x = 3`, `a ≥ 7` and `b ≥ y - 4`).
pub fn odd_x(x: usize, y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if !odd_x_applies(x, y, a, b) {
        return pre(format!("odd-x hypotheses fail for x={x}, y={y}, a={a}, b={b}"));
    }
    shared_search(x, y, a, b, c, "odd-x")
}
