//! Building blocks with support `{1, x}`: standard realizations (an
//! ω-construction behind a run of 1-edges) and perfect ones (chained cores).

use super::omega::{omega, omega_patterns, pattern_path, Pattern};
use super::perfect::{perfect_even_x, PerfectVariant};
use crate::path::{chain, with_ones, PathSeq};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Least number of 1-edges in a standard realization of `{1^*, x^b}`.
pub fn standard_min_ones(x: usize, b: usize) -> usize {
    omega(x, b)
}

/// Standard realizations of `{1^a, x^b}`, differing in their final edge
/// where possible. Empty when none is known.
pub fn standard_1x_candidates(x: usize, a: usize, b: usize) -> Vec<PathSeq> {
    if b == 0 {
        return vec![PathSeq::identity(a + 1)];
    }
    let mut out: Vec<PathSeq> = Vec::new();
    let mut push = |p: PathSeq| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    for (pattern, core) in omega_patterns(x, b) {
        let used = pattern.ones(x);
        if used > a {
            continue;
        }
        let extra = a - used;
        if let Ok(p) = with_ones(&core, extra) {
            push(p);
        }
        if extra > 0 && core.is_perfect() {
            if let Ok(p) = chain(&core, &PathSeq::identity(extra + 1)) {
                push(p);
            }
        }
    }
    if let Some(p) = perfect_1x(x, a.saturating_sub(1), b) {
        if a > 0 {
            if let Ok(p) = chain(&p, &PathSeq::identity(2)) {
                push(p);
            }
        }
    }
    out
}

pub fn standard_1x(x: usize, a: usize, b: usize) -> Option<PathSeq> {
    standard_1x_candidates(x, a, b).into_iter().next()
}

/// Perfect realizations with support `{1, x}` of every size up to a bound,
/// by chaining the known perfect cores with the fewest 1-edges.
#[derive(Debug)]
pub struct PerfectTable {
    pub x: usize,
    cores: Vec<(usize, usize, PathSeq)>,
    /// `best[b] = (ones, core index)` of the cheapest first core.
    best: Vec<Option<(usize, usize)>>,
}

impl PerfectTable {
    pub fn new(x: usize, bmax: usize) -> Self {
        let mut cores: Vec<(usize, usize, PathSeq)> = Vec::new();
        for b in 1..=bmax {
            for p in [Pattern::H1, Pattern::H2] {
                if let Ok(path) = pattern_path(x, b, p) {
                    if path.is_perfect() {
                        cores.push((b, p.ones(x), path));
                    }
                }
            }
        }
        if x % 2 == 0 {
            for variant in [PerfectVariant::A, PerfectVariant::B] {
                for s in 0.. {
                    let Ok(r) = perfect_even_x(x, s, variant) else {
                        if s == 0 {
                            continue;
                        }
                        break;
                    };
                    let b = r.target.count(x);
                    if b > bmax {
                        break;
                    }
                    cores.push((b, r.target.count(1), r.path));
                }
            }
        }
        cores.sort_by_key(|c| (c.0, c.1));
        cores.dedup_by_key(|c| c.0);
        let mut best: Vec<Option<(usize, usize)>> = vec![None; bmax + 1];
        best[0] = Some((0, usize::MAX));
        for b in 1..=bmax {
            for (i, (cb, co, _)) in cores.iter().enumerate() {
                if *cb > b {
                    break;
                }
                if let Some((rest, _)) = best[b - cb] {
                    let total = rest + co;
                    if best[b].map_or(true, |(o, _)| total < o) {
                        best[b] = Some((total, i));
                    }
                }
            }
        }
        Self { x, cores, best }
    }

    pub fn bmax(&self) -> usize {
        self.best.len() - 1
    }

    /// Least `a` with a known perfect realization of `{1^a, x^b}`.
    pub fn min_ones(&self, b: usize) -> Option<usize> {
        self.best.get(b).copied().flatten().map(|(o, _)| o)
    }

    pub fn build(&self, a: usize, b: usize) -> Option<PathSeq> {
        let need = self.min_ones(b)?;
        if a < need {
            return None;
        }
        let mut path = PathSeq::identity(1);
        let mut rest = b;
        while rest > 0 {
            let (_, i) = self.best[rest]?;
            let (cb, _, core) = &self.cores[i];
            path = if path.len() == 1 { core.clone() } else { chain(&path, core).ok()? };
            rest -= cb;
        }
        with_ones(&path, a - need).ok()
    }
}

fn tables() -> &'static Mutex<HashMap<usize, Arc<PerfectTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<PerfectTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// Shared table for modulus `x` covering at least `bmax` x-edges.
pub fn perfect_table(x: usize, bmax: usize) -> Arc<PerfectTable> {
    let mut guard = tables().lock().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = guard.get(&x) {
        if t.bmax() >= bmax {
            return t.clone();
        }
    }
    let t = Arc::new(PerfectTable::new(x, bmax.max(64)));
    guard.insert(x, t.clone());
    t
}

pub fn perfect_min_ones(x: usize, b: usize) -> Option<usize> {
    perfect_table(x, b).min_ones(b)
}

/// A perfect realization of `{1^a, x^b}` when one is known.
pub fn perfect_1x(x: usize, a: usize, b: usize) -> Option<PathSeq> {
    perfect_table(x, b).build(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiset::EdgeMultiset;
    use crate::path::Mode;
    use crate::verify::verify;

    #[test]
    fn perfect_cores_for_three() {
        let p = perfect_1x(3, 3, 6).unwrap();
        assert_eq!(p.vertices, vec![0, 1, 4, 7, 8, 5, 2, 3, 6, 9]);
        assert_eq!(perfect_min_ones(3, 1), None);
        assert_eq!(perfect_min_ones(3, 4), Some(4));
        assert_eq!(perfect_min_ones(3, 2), Some(2));
    }

    #[test]
    fn library_paths_verify() {
        for x in 2..=8 {
            for b in 0..=30 {
                for a in 0..=2 * x + 2 {
                    let target = EdgeMultiset::from_pairs([(1, a), (x, b)]);
                    for p in standard_1x_candidates(x, a, b) {
                        assert!(p.is_standard());
                        assert!(verify(&p, &target, Mode::Linear).matches_target);
                    }
                    if let Some(p) = perfect_1x(x, a, b) {
                        assert!(p.is_perfect());
                        assert!(verify(&p, &target, Mode::Linear).matches_target, "{x} {a} {b}");
                    }
                }
            }
        }
    }
}
