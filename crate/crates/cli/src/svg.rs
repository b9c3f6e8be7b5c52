//! Grid drawings of paths: vertex `u` sits in column `u mod x`, row
//! `u div x`, rows counted bottom to top. 1- and x-edges are straight;
//! every other length is drawn as an arc.

use bhr_core::PathSeq;
use std::fmt::Write;

const SPACING: f64 = 40.0;
const MARGIN: f64 = 30.0;
const RADIUS: f64 = 4.0;
/// Arc bulge as a fraction of the chord.
const BULGE: f64 = 0.2;

fn position(u: usize, x: usize, rows: usize) -> (f64, f64) {
    let (col, row) = (u % x, u / x);
    (MARGIN + col as f64 * SPACING, MARGIN + (rows - 1 - row) as f64 * SPACING)
}

/// Renders `path` over the `x`-column grid of its order. Output depends
/// only on the arguments.
pub fn emit_diagram(path: &PathSeq, x: usize) -> String {
    assert!(x >= 2, "column modulus must be at least 2");
    let v = path.v;
    let rows = v.div_ceil(x).max(1);
    let width = 2.0 * MARGIN + (x - 1) as f64 * SPACING;
    let height = 2.0 * MARGIN + (rows - 1) as f64 * SPACING;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(s, r#"<g fill="none" stroke="black" stroke-width="1.5">"#);
    for pair in path.vertices.windows(2) {
        let (u, w) = (pair[0], pair[1]);
        let (x1, y1) = position(u, x, rows);
        let (x2, y2) = position(w, x, rows);
        let len = u.abs_diff(w);
        if len == 1 || len == x {
            let _ = writeln!(s, r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}"/>"#);
        } else {
            // Bulge to the left of the direction of travel.
            let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
            let (cx, cy) = (mx - (y2 - y1) * BULGE, my + (x2 - x1) * BULGE);
            let _ = writeln!(s, r#"<path d="M {x1:.1} {y1:.1} Q {cx:.1} {cy:.1} {x2:.1} {y2:.1}"/>"#);
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g fill="black">"#);
    for u in 0..v {
        let (cx, cy) = position(u, x, rows);
        let _ = writeln!(s, r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="{RADIUS:.1}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="11">"#);
    let mut ends: Vec<usize> = path.first().into_iter().chain(path.last()).collect();
    ends.dedup();
    for u in ends {
        let (px, py) = position(u, x, rows);
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}">{u}</text>"#, px + 6.0, py - 6.0);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let svg = emit_diagram(&PathSeq::identity(1), 3);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("<line") && !svg.contains("<path"));
    }

    #[test]
    fn bottom_row_is_lowest() {
        let svg = emit_diagram(&PathSeq::identity(6), 3);
        // Vertex 0 on the lower of two rows.
        assert!(svg.contains(r#"<circle cx="30.0" cy="70.0""#));
        assert!(svg.contains(r#"<circle cx="30.0" cy="30.0""#));
    }
}
