//! Instances with `a ≥ f(x, y)`: an ω-construction for `{1, y}` concatenated
//! with one for `{1, x}`, or, when that needs one 1-edge too many (odd `x`
//! and `y`), a sweep realizing `{1^(y-1), x, y^c}` in front of the rest.

use super::certificate::{Certificate, Realization};
use super::grid::{guided_sweep, Sweep};
use super::library::standard_1x;
use super::omega::{omega, omega_realization};
use super::shared::shared_search;
use crate::equivalence::f_bound;
use crate::error::{pre, Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{concatenate, with_ones, PathSeq};

fn join(s: PathSeq, rest: PathSeq) -> Result<PathSeq> {
    if rest.len() == 1 {
        Ok(s)
    } else {
        concatenate(&s, &rest, 0)
    }
}

/// The guide `[0, 1, ..., y-x-1, y-1, y-2, ..., y-x]` swept across full
/// fauxsets: `{1^(y-2), x, y^c}` on `y + c` vertices, or with a tail curl
/// `{1^(y-1), x, y^c}` on `y + c + 1`. The single x-edge joins two fauxset
/// runs of unequal height at their lowest elements.
pub fn single_x_sweep(x: usize, y: usize, c: usize, curl: bool) -> Result<Realization> {
    if !(1 < x && x < y) || c == 0 {
        return pre("need 1 < x < y and c > 0");
    }
    let guide: Vec<usize> = (0..y - x).chain((y - x..y).rev()).collect();
    let ones = y - 2 + usize::from(curl);
    let path = guided_sweep(y + c + usize::from(curl), &guide, Sweep::Forward, curl)?;
    let cert = Certificate::constructive("near-bound").with("shape", if curl { "g2" } else { "g1" });
    Realization::checked(path, EdgeMultiset::triple(x, y, ones, 1, c), cert)
}

/// `{1^(y-1), x, y^c}`: whichever of the two single-x sweeps fits.
pub fn one_x_edge(x: usize, y: usize, c: usize) -> Result<Realization> {
    if let Ok(r) = single_x_sweep(x, y, c, false) {
        let path = with_ones(&r.path, 1)?;
        return Realization::checked(path, EdgeMultiset::triple(x, y, y - 1, 1, c), r.certificate);
    }
    single_x_sweep(x, y, c, true)
}

pub fn near_bound(x: usize, y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if !(1 < x && x < y) {
        return pre(format!("need 1 < x < y, got x={x}, y={y}"));
    }
    let f = f_bound(x, y);
    if a < f {
        return pre(format!("a = {a} is below f({x}, {y}) = {f}"));
    }
    let target = EdgeMultiset::triple(x, y, a, b, c);
    if c == 0 {
        let path = standard_1x(x, a, b).ok_or_else(|| Error::Unavailable(target.to_string()))?;
        return Realization::checked(path, target, Certificate::constructive("near-bound"));
    }
    let oy = omega(y, c);
    if a >= oy && (b == 0 || a - oy >= omega(x, b)) {
        let s = omega_realization(y, c)?;
        let rest = standard_1x(x, a - oy, b).ok_or_else(|| Error::Unavailable("remainder".into()))?;
        let cert = Certificate::constructive("near-bound")
            .with("shape", "concat")
            .with("head", &s.certificate.rule);
        return Realization::checked(join(s.path, rest)?, target, cert);
    }
    if x % 2 == 1 && y % 2 == 1 && b >= 1 && a + 1 >= y {
        let (ra, rb) = (a + 1 - y, b - 1);
        if rb == 0 || ra >= omega(x, rb) {
            if let (Ok(s), Some(rest)) = (one_x_edge(x, y, c), standard_1x(x, ra, rb)) {
                let cert = s.certificate.clone();
                return Realization::checked(join(s.path, rest)?, target, cert);
            }
        }
    }
    shared_search(x, y, a, b, c, "near-bound")
}
