//! Stretching a `{1, x}` realization on `y` vertices across `v = y + c`
//! vertices, turning every row change into a y-edge.

use super::certificate::{Certificate, Realization};
use super::grid::{guided_sweep, Sweep};
use super::library::standard_1x;
use super::omega::omega;
use crate::error::{pre, Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{concatenate, PathSeq};

fn guide_counts(x: usize, guide: &PathSeq) -> Result<(usize, usize)> {
    if !guide.is_standard() {
        return pre("guide must be a standard linear realization");
    }
    let d = guide.diffs(crate::Mode::Linear);
    let a = d.iter().filter(|&&l| l == 1).count();
    let b = d.iter().filter(|&&l| l == x).count();
    if a + b != d.len() {
        return pre(format!("guide uses lengths other than 1 and {x}"));
    }
    Ok((a, b))
}

/// `{1^a, x^b, y^c}` from a guide realizing `{1^a, x^b}` with `a + b = y - 1`,
/// for `c ≡ 0, 1 (mod y)`.
pub fn stretch_y(x: usize, y: usize, guide: &PathSeq, c: usize) -> Result<Realization> {
    if !(1 < x && x < y) {
        return pre(format!("need 1 < x < y, got x={x}, y={y}"));
    }
    if guide.len() != y {
        return pre(format!("guide has {} vertices, expected {y}", guide.len()));
    }
    let (a, b) = guide_counts(x, guide)?;
    let sweep = match c % y {
        0 => Sweep::Forward,
        1 => Sweep::Backward,
        r => return pre(format!("c ≡ {r} (mod {y}); need 0 or 1")),
    };
    let path = guided_sweep(y + c, &guide.vertices, sweep, false)?;
    let cert = Certificate::constructive("stretch-y")
        .with("guide", format!("{:?}", guide.vertices))
        .with("sweep", format!("{sweep:?}").to_lowercase());
    Realization::checked(path, EdgeMultiset::triple(x, y, a, b, c), cert)
}

/// As [`stretch_y`] but with surplus edges: the stretched part takes `y - 1`
/// of the short edges and a standard `{1, x}` realization takes the rest.
pub fn stretch_with_surplus(x: usize, y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if a + b + 1 < y {
        return pre("fewer than y - 1 short edges");
    }
    let split = (0..=b.min(y - 1)).rev().find_map(|bg| {
        let ag = y - 1 - bg;
        let (ar, br) = (a.checked_sub(ag)?, b - bg);
        let guide_ok = bg == 0 || ag >= omega(x, bg);
        let rest_ok = br == 0 || ar >= omega(x, br);
        (guide_ok && rest_ok).then_some((ag, bg, ar, br))
    });
    let Some((ag, bg, ar, br)) = split else {
        return Err(Error::Unavailable("no split of the short edges fits".into()));
    };
    let guide = standard_1x(x, ag, bg).ok_or_else(|| Error::Unavailable("guide".into()))?;
    let s = stretch_y(x, y, &guide, c)?;
    let path = if ar + br == 0 {
        s.path
    } else {
        let rest = standard_1x(x, ar, br).ok_or_else(|| Error::Unavailable("remainder".into()))?;
        concatenate(&s.path, &rest, 0)?
    };
    let cert = s.certificate.with("surplus", format!("{{1^{ar},{x}^{br}}}"));
    Realization::checked(path, EdgeMultiset::triple(x, y, a, b, c), cert)
}

/// Standard realizations of `{1^a, x^b}` on `y = a + b + 1` vertices, in
/// lexicographic order.
pub fn guides(x: usize, a: usize, b: usize) -> Vec<PathSeq> {
    fn go(x: usize, y: usize, left: [usize; 2], cur: &mut Vec<usize>, seen: &mut [bool], out: &mut Vec<PathSeq>) {
        if cur.len() == y {
            out.push(PathSeq { v: y, vertices: cur.clone() });
            return;
        }
        let u = *cur.last().unwrap();
        let mut next = Vec::with_capacity(4);
        for (i, len) in [1, x].into_iter().enumerate() {
            if left[i] == 0 {
                continue;
            }
            if u >= len {
                next.push((u - len, i));
            }
            next.push((u + len, i));
        }
        next.sort_unstable();
        for (w, i) in next {
            if w < y && !seen[w] {
                let mut l = left;
                l[i] -= 1;
                seen[w] = true;
                cur.push(w);
                go(x, y, l, cur, seen, out);
                cur.pop();
                seen[w] = false;
            }
        }
    }
    let y = a + b + 1;
    let mut seen = vec![false; y];
    seen[0] = true;
    let mut out = Vec::new();
    go(x, y, [a, b], &mut vec![0], &mut seen, &mut out);
    out
}

/// Tries every guide and both sweep orders for `{1^a, x^b, y^c}` with
/// `a + b = y - 1`; used for residues the stretch does not handle.
pub fn guide_search(x: usize, y: usize, a: usize, b: usize, c: usize) -> Result<Realization> {
    if a + b + 1 != y {
        return pre("guide search needs a + b = y - 1");
    }
    let target = EdgeMultiset::triple(x, y, a, b, c);
    for g in guides(x, a, b) {
        for sweep in [Sweep::Forward, Sweep::Backward] {
            let Ok(path) = guided_sweep(y + c, &g.vertices, sweep, false) else { continue };
            let cert = Certificate::constructive("guided-sweep")
                .with("guide", format!("{:?}", g.vertices))
                .with("sweep", format!("{sweep:?}").to_lowercase());
            if let Ok(r) = Realization::checked(path, target.clone(), cert) {
                return Ok(r);
            }
        }
    }
    Err(Error::Unavailable(format!("no guide works for {target}")))
}
