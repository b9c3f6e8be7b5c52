//! One entry point: given any multiset and order, find a construction that
//! applies (on the multiset or one of its unit-scaled equivalents), fall
//! back to published coverage, or say why nothing applies.

use super::certificate::{post_verify, Certificate, Realization};
use super::library::standard_1x;
use super::multiple_tx::{multiple_tx, tx_hypotheses};
use super::near_bound::near_bound;
use super::odd_even::odd_x_even_y;
use super::omega::{omega, omega_realization};
use super::shared::{odd_x, odd_x_applies, shared_search};
use super::stretch::stretch_with_surplus;
use crate::arith::{gcd, mod_inverse, reduce};
use crate::equivalence::{equivalent_forms, f_bound, Form};
use crate::error::{Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{with_ones, Mode, PathSeq};
use crate::verify::admissibility;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    /// `path` is a verified cyclic realization of the input.
    Constructive { certificate: Certificate, form: String, path: PathSeq },
    Citational { certificate: Certificate, form: String },
    NotCovered { reason: String },
    Rejected { reason: String },
}

impl Verdict {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Constructive { certificate, .. } | Verdict::Citational { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn path(&self) -> Option<&PathSeq> {
        match self {
            Verdict::Constructive { path, .. } => Some(path),
            _ => None,
        }
    }
}

/// `{1^a, y^c}`-type and `{1^a, x^b}`-type instances.
fn two_lengths(y: usize, a: usize, c: usize) -> Option<Realization> {
    if c == 0 {
        return Some(Realization {
            path: PathSeq::identity(a + 1),
            target: EdgeMultiset::from_pairs([(1, a)]),
            certificate: Certificate::constructive("identity"),
        });
    }
    let base = omega_realization(y, c).ok()?;
    let extra = a.checked_sub(base.target.count(1))?;
    let path = with_ones(&base.path, extra).ok()?;
    let target = EdgeMultiset::from_pairs([(1, a), (y, c)]);
    Realization::checked(path, target, base.certificate).ok()
}

/// Constructive rules in priority order for `{1^a, x^b, y^c}`, `x < y`.
pub fn try_constructive(x: usize, y: usize, a: usize, b: usize, c: usize) -> Option<Realization> {
    if b == 0 {
        return two_lengths(y, a, c);
    }
    if c == 0 {
        let path = standard_1x(x, a, b)?;
        let cert = Certificate::constructive("omega-concat");
        return Realization::checked(path, EdgeMultiset::from_pairs([(1, a), (x, b)]), cert).ok();
    }
    if a + b + 1 < y {
        return None;
    }
    let stretch = c % y <= 1
        && ((a + b + 1 == y && a >= omega(x, b)) || (x == 3 && a >= 4 && a + b > y));
    if stretch {
        if let Ok(r) = stretch_with_surplus(x, y, a, b, c) {
            return Some(r);
        }
    }
    let odd_even = x % 2 == 1 && y % 2 == 0 && 2 * x >= y && x + 1 < y;
    if odd_even {
        let exact = a + b + 1 == y && b % 2 == 0 && b < y - x;
        if exact || (a >= 2 * x && b + x + 1 >= y) {
            if let Ok(r) = odd_x_even_y(x, y, a, b, c) {
                return Some(r);
            }
        }
    }
    if odd_x_applies(x, y, a, b) {
        if let Ok(r) = odd_x(x, y, a, b, c) {
            return Some(r);
        }
    }
    if a >= f_bound(x, y) {
        if let Ok(r) = near_bound(x, y, a, b, c) {
            return Some(r);
        }
    }
    if y % x == 0 && tx_hypotheses(x, y / x, a, b, c).any() {
        if let Ok(r) = multiple_tx(x, y / x, a, b, c) {
            return Some(r);
        }
    }
    if a + b + 1 == y || a + b == y {
        if let Ok(r) = shared_search(x, y, a, b, c, "shared-fauxset") {
            return Some(r);
        }
    }
    None
}

fn general_threshold(x: usize, y: usize) -> usize {
    match (x % 2 == 0, y % 2 == 0) {
        (false, false) => x + y,
        (false, true) => x + y - 1,
        (true, false) => x + y - 2,
        (true, true) => y - 1,
    }
}

/// Published coverage for an admissible `{1^a, x^b, y^c}` of order `v`.
pub fn citational(x: usize, y: usize, a: usize, b: usize, c: usize, v: usize) -> Option<&'static str> {
    if v <= 37 {
        return Some("small-order");
    }
    if y <= 7 || (x == 2 && matches!(y, 8 | 10 | 12)) {
        return Some("small-max");
    }
    if a >= general_threshold(x, y) {
        return Some("known-general");
    }
    if x == 2 && a + b + 1 >= y && (y % 2 == 0 || a >= 3) {
        return Some("known-1-2-y");
    }
    if x == 3 && y % 2 == 0 && c % 2 == 1 && (a > y || (a == y && b % 3 != 0)) {
        return Some("known-1-3-y");
    }
    if y == x + 1 && a > x {
        return Some("known-consecutive");
    }
    if y == 2 * x && a + 2 >= x && c % 2 == 0 && 2 * b + 4 >= 10 * x + c {
        return Some("known-double");
    }
    if x % 2 == 0 && y > 2 * x && a + 2 >= 3 * x && a + b + 1 >= x + y {
        return Some("known-even-x");
    }
    let coprime = gcd(x, v) == 1 && gcd(y, v) == 1;
    if coprime && x == 2 && v > 4 * y && !(y % 2 == 1 && a <= 2) {
        return Some("known-large-v");
    }
    if coprime && y == x + 1 && v >= 2 * x * x + 13 * x + 11 {
        return Some("known-large-v");
    }
    None
}

fn form_name(f: &Form) -> String {
    format!("{{1,{},{}}}x{}", f.x, f.y, f.unit)
}

fn failing_divisor(l: &EdgeMultiset, v: usize) -> Option<usize> {
    (2..=v).filter(|d| v % d == 0).find(|d| {
        let m: usize = l.iter().filter(|(len, _)| len % d == 0).map(|(_, c)| c).sum();
        m > v - d
    })
}

/// Maps a linear realization of a scaled form back to a cyclic realization
/// of `original`, verifying the result.
fn lift(r: &Realization, unit: usize, v: usize, original: &EdgeMultiset) -> Result<PathSeq> {
    let path = PathSeq::new(v, r.path.vertices.iter().map(|&p| p * unit % v).collect())?;
    post_verify(&r.certificate.rule, &path, original, Mode::Cyclic)?;
    Ok(path)
}

/// Decides how (or whether) `l` of order `v` is covered.
pub fn construct_any(l: &EdgeMultiset, v: usize) -> Result<Verdict> {
    let adm = match admissibility(l, v) {
        Ok(adm) => adm,
        Err(Error::Precondition(reason)) => return Ok(Verdict::Rejected { reason }),
        Err(e) => return Err(e),
    };
    if !adm.admissible {
        let d = failing_divisor(l, v).unwrap_or(v);
        return Ok(Verdict::Rejected {
            reason: format!("{} lengths are multiples of {d}, more than v - {d} = {}", l.iter().filter(|(len, _)| len % d == 0).map(|(_, c)| c).sum::<usize>(), v - d),
        });
    }
    if v == 1 {
        let certificate = Certificate::constructive("identity");
        return Ok(Verdict::Constructive { certificate, form: "{}".into(), path: PathSeq::identity(1) });
    }
    // Rescale so that 1 is a length.
    let support = l.support();
    let outer = if support.contains(&1) {
        1
    } else {
        match support.iter().find(|&&s| gcd(s, v) == 1) {
            Some(&g) => g,
            None => return Ok(Verdict::NotCovered { reason: "no length is a unit modulo v".into() }),
        }
    };
    let inv = mod_inverse(outer, v)?;
    let mut scaled = EdgeMultiset::new();
    for (len, count) in l.iter() {
        scaled.add(reduce(len * inv % v, v).expect("unit multiples are nonzero"), count);
    }
    let sup = scaled.support();
    let rest: Vec<usize> = sup.iter().copied().filter(|&s| s != 1).collect();
    let a = scaled.count(1);
    match rest.len() {
        0 | 1 => {
            let y = rest.first().copied().unwrap_or(1);
            let c = if rest.is_empty() { 0 } else { scaled.count(y) };
            if let Some(r) = two_lengths(y, a, c) {
                let path = lift(&r, outer, v, l)?;
                return Ok(Verdict::Constructive { certificate: r.certificate, form: "original".into(), path });
            }
            Ok(Verdict::Citational {
                certificate: Certificate::citational("known-two-lengths"),
                form: "original".into(),
            })
        }
        2 => {
            let (x, y) = (rest[0], rest[1]);
            let abc = (a, scaled.count(x), scaled.count(y));
            let mut forms = vec![Form {
                x,
                y,
                ones: crate::equivalence::Exp::A,
                x_exp: crate::equivalence::Exp::B,
                y_exp: crate::equivalence::Exp::C,
                unit: 1,
                degenerate: false,
            }];
            if gcd(x, v) == 1 && gcd(y, v) == 1 {
                let eq = equivalent_forms(x, y, v)?;
                forms.extend([eq.form_a, eq.form_b].into_iter().filter(|f| !f.degenerate));
            }
            let feasible = |f: &&Form| {
                let (fa, fb, fc) = f.counts(abc);
                fc == 0 || fa + fb + 1 >= f.y
            };
            for f in forms.iter().filter(feasible) {
                let (fa, fb, fc) = f.counts(abc);
                if let Some(r) = try_constructive(f.x, f.y, fa, fb, fc) {
                    let path = lift(&r, f.unit * outer % v, v, l)?;
                    return Ok(Verdict::Constructive { certificate: r.certificate, form: form_name(f), path });
                }
            }
            for f in &forms {
                let (fa, fb, fc) = f.counts(abc);
                if let Some(rule) = citational(f.x, f.y, fa, fb, fc, v) {
                    return Ok(Verdict::Citational { certificate: Certificate::citational(rule), form: form_name(f) });
                }
            }
            Ok(Verdict::NotCovered { reason: "no construction or published result applies to any form".into() })
        }
        _ => Ok(Verdict::NotCovered { reason: format!("support of size {} is out of scope", sup.len()) }),
    }
}
