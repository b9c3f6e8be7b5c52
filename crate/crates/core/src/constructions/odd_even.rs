//! Odd `x`, even `y` with `y/2 ≤ x < y - 1`: a run of 1-edges chained to an
//! h1-shaped `{1, x}` realization, used as a guide across full y-fauxsets.

use super::certificate::{Certificate, Realization};
use super::grid::{guided_sweep, Sweep};
use super::library::standard_1x;
use super::omega::{pattern_path, Pattern};
use crate::error::{pre, Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{chain, concatenate, PathSeq};

/// `{1^(y-1-d), x^d, y^c}` for even `d ≤ y - x - 1`.
fn core(x: usize, y: usize, d: usize, c: usize) -> Result<Realization> {
    let g1 = PathSeq::identity(y - x - d + 1);
    let g2 = if d == 0 { PathSeq::identity(x) } else { pattern_path(x, d, Pattern::H1)? };
    let guide = chain(&g1, &g2)?;
    let sweep = if c % 2 == 0 { Sweep::Forward } else { Sweep::Backward };
    let path = guided_sweep(y + c, &guide.vertices, sweep, false)?;
    let cert = Certificate::constructive("odd-x-even-y")
        .with("guide", format!("{:?}", guide.vertices))
        .with("sweep", format!("{sweep:?}").to_lowercase());
    Realization::checked(path, EdgeMultiset::triple(x, y, y - 1 - d, d, c), cert)
}

pub fn odd_x_even_y(x: usize, y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if y % 2 == 1 || x % 2 == 0 || 2 * x < y || x + 1 >= y {
        return pre(format!("need x odd, y even and y/2 ≤ x < y - 1; got x={x}, y={y}"));
    }
    if c == 0 {
        return pre("c must be positive");
    }
    if a + b + 1 == y && b % 2 == 0 && b < y - x {
        return core(x, y, b, c);
    }
    let d = y - x - 1;
    if a >= 2 * x && b >= d {
        let s = core(x, y, d, c)?;
        let rest = standard_1x(x, a - x, b - d)
            .ok_or_else(|| Error::Unavailable(format!("{{1^{},{x}^{}}}", a - x, b - d)))?;
        let path = if rest.len() == 1 { s.path } else { concatenate(&s.path, &rest, 0)? };
        let cert = s.certificate.with("rest", format!("{{1^{},{x}^{}}}", a - x, b - d));
        return Realization::checked(path, EdgeMultiset::triple(x, y, a, b, c), cert);
    }
    pre(format!("(a, b) = ({a}, {b}) fits neither the exact nor the concatenated form"))
}
