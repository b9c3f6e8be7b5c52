use crate::error::{Error, Result};
use crate::multiset::EdgeMultiset;
use serde::{Deserialize, Serialize};

/// How an edge between `u` and `w` is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `|u - w|`
    Linear,
    /// `min(d, v - d)` with `d = |u - w|`
    Cyclic,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" => Ok(Mode::Linear),
            "cyclic" => Ok(Mode::Cyclic),
            other => Err(format!("unknown mode `{other}` (expected linear or cyclic)")),
        }
    }
}

/// A sequence of distinct vertices of the complete graph on `v` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathSeq {
    pub v: usize,
    pub vertices: Vec<usize>,
}

impl PathSeq {
    /// Validates range and distinctness.
    pub fn new(v: usize, vertices: Vec<usize>) -> Result<Self> {
        if v == 0 {
            return Err(Error::MalformedPath("order v must be at least 1".into()));
        }
        let mut seen = vec![false; v];
        for &p in &vertices {
            if p >= v {
                return Err(Error::MalformedPath(format!("vertex {p} is outside [0, {v})")));
            }
            if seen[p] {
                return Err(Error::MalformedPath(format!("vertex {p} repeats")));
            }
            seen[p] = true;
        }
        Ok(Self { v, vertices })
    }

    /// A path whose order is its own vertex count, e.g. a linear realization.
    pub fn spanning(vertices: Vec<usize>) -> Result<Self> {
        Self::new(vertices.len().max(1), vertices)
    }

    /// `[0, 1, ..., n-1]`.
    pub fn identity(n: usize) -> Self {
        Self { v: n.max(1), vertices: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.vertices.len() == self.v
    }

    pub fn is_standard(&self) -> bool {
        self.is_hamiltonian() && self.first() == Some(0)
    }

    pub fn is_perfect(&self) -> bool {
        self.is_standard() && self.last() == Some(self.v - 1)
    }

    /// Consecutive edge lengths in path order.
    pub fn diffs(&self, mode: Mode) -> Vec<usize> {
        self.vertices
            .windows(2)
            .map(|w| edge_len(w[0], w[1], self.v, mode))
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { v: self.v, vertices }
    }
}

pub(crate) fn edge_len(u: usize, w: usize, v: usize, mode: Mode) -> usize {
    let d = u.abs_diff(w);
    match mode {
        Mode::Linear => d,
        Mode::Cyclic => d.min(v - d),
    }
}

fn check(path: &PathSeq) -> Result<()> {
    PathSeq::new(path.v, path.vertices.clone()).map(|_| ())
}

/// Multiset of edge lengths along `path`.
pub fn lengths(path: &PathSeq, mode: Mode) -> Result<EdgeMultiset> {
    check(path)?;
    if path.is_empty() {
        return Err(Error::MalformedPath("path has no vertices".into()));
    }
    Ok(path.diffs(mode).into_iter().collect())
}

/// Replaces each vertex `p` by `v - 1 - p`.
pub fn complement(path: &PathSeq) -> Result<PathSeq> {
    check(path)?;
    let v = path.v;
    Ok(PathSeq { v, vertices: path.vertices.iter().map(|&p| v - 1 - p).collect() })
}

/// Adds `t` to each vertex, embedding the path in a graph of order `new_v`.
pub fn translate(path: &PathSeq, t: usize, new_v: usize) -> Result<PathSeq> {
    check(path)?;
    let max = path.vertices.iter().max().copied().unwrap_or(0);
    if max + t >= new_v {
        return Err(Error::Range(format!(
            "translating vertex {max} by {t} leaves the graph of order {new_v}"
        )));
    }
    Ok(PathSeq { v: new_v, vertices: path.vertices.iter().map(|&p| p + t).collect() })
}

/// `p` followed by `q`, joined by one edge from the last of `p` to the
/// first of `q`. The order of the result is the larger of the two orders.
pub fn bridge_concat(p: &PathSeq, q: &PathSeq, expected_len: Option<usize>) -> Result<PathSeq> {
    check(p)?;
    check(q)?;
    let v = p.v.max(q.v);
    let mut seen = vec![false; v];
    for &a in &p.vertices {
        seen[a] = true;
    }
    if let Some(&dup) = q.vertices.iter().find(|&&b| seen[b]) {
        return Err(Error::NotDisjoint(dup));
    }
    if let (Some(a), Some(b), Some(expected)) = (p.last(), q.first(), expected_len) {
        let actual = a.abs_diff(b);
        if actual != expected {
            return Err(Error::BridgeMismatch { expected, actual });
        }
    }
    let mut vertices = p.vertices.clone();
    vertices.extend_from_slice(&q.vertices);
    Ok(PathSeq { v, vertices })
}

fn require_standard(p: &PathSeq, name: &str) -> Result<()> {
    check(p)?;
    if !p.is_standard() {
        return Err(Error::Precondition(format!("{name} is not a standard linear realization")));
    }
    Ok(())
}

/// Joins two standard realizations at a shared vertex: the complement of
/// `h`, reversed, followed by `g` translated by `|h| - 1`. The result
/// realizes the union of both multisets, is standard when `h` is perfect and
/// perfect when both are. `pad_ones > 0` then prefixes a run of 1-edges.
pub fn concatenate(g: &PathSeq, h: &PathSeq, pad_ones: usize) -> Result<PathSeq> {
    require_standard(g, "g")?;
    require_standard(h, "h")?;
    let joined = join(g, h);
    if pad_ones == 0 {
        Ok(joined)
    } else {
        Ok(join(&joined, &PathSeq::identity(pad_ones + 1)))
    }
}

fn join(g: &PathSeq, h: &PathSeq) -> PathSeq {
    let w = h.v;
    let v = g.v + w - 1;
    let mut vertices: Vec<usize> = h.vertices.iter().rev().map(|&p| w - 1 - p).collect();
    vertices.extend(g.vertices.iter().skip(1).map(|&p| p + w - 1));
    PathSeq { v, vertices }
}

/// `{1^s} ∪ L`: prefixes `s` unit steps to a standard realization.
pub fn with_ones(g: &PathSeq, s: usize) -> Result<PathSeq> {
    if s == 0 {
        require_standard(g, "g")?;
        return Ok(g.clone());
    }
    concatenate(g, &PathSeq::identity(s + 1), 0)
}

/// `g` then `h`, sharing `g`'s final vertex: requires `g` perfect and `h`
/// standard. Standard, and perfect when `h` is.
pub fn chain(g: &PathSeq, h: &PathSeq) -> Result<PathSeq> {
    require_standard(g, "g")?;
    require_standard(h, "h")?;
    if !g.is_perfect() {
        return Err(Error::Precondition("g is not perfect".into()));
    }
    let off = g.v - 1;
    let mut vertices = g.vertices.clone();
    vertices.extend(h.vertices.iter().skip(1).map(|&p| p + off));
    Ok(PathSeq { v: g.v + h.v - 1, vertices })
}
