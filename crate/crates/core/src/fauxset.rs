//! Residue classes of the vertex set and their in-order traversals.

use crate::error::{pre, Error, Result};
use crate::path::PathSeq;
use serde::{Deserialize, Serialize};

/// The vertices of `[0, v)` congruent to `k` modulo `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FauxsetSpec {
    pub x: usize,
    pub k: usize,
    pub v: usize,
    /// Top row: `qstar * x + k` is the largest member.
    pub qstar: usize,
}

impl FauxsetSpec {
    pub fn new(x: usize, k: usize, v: usize) -> Result<Self> {
        if x < 2 {
            return pre("fauxset modulus must be at least 2");
        }
        if k >= x || k >= v {
            return pre(format!("class {k} is empty for modulus {x} and order {v}"));
        }
        Ok(Self { x, k, v, qstar: top_row(x, k, v) })
    }

    /// Number of members.
    pub fn size(&self) -> usize {
        self.qstar + 1
    }

    pub fn at(&self, row: usize) -> usize {
        row * self.x + self.k
    }
}

/// `q` when `k < r`, else `q - 1`, where `v = q x + r`.
pub fn top_row(x: usize, k: usize, v: usize) -> usize {
    let (q, r) = (v / x, v % x);
    if k < r {
        q
    } else {
        q - 1
    }
}

/// `[lo x + k, ..., hi x + k]`, reversed when `descending`.
pub fn fauxset_segment(spec: &FauxsetSpec, lo: usize, hi: usize, descending: bool) -> Result<PathSeq> {
    if hi > spec.qstar {
        return Err(Error::OutOfClass { class: spec.k, hi, qstar: spec.qstar });
    }
    if lo > hi {
        return pre(format!("segment rows {lo}..{hi} are reversed"));
    }
    let mut vertices: Vec<usize> = (lo..=hi).map(|row| spec.at(row)).collect();
    if descending {
        vertices.reverse();
    }
    Ok(PathSeq { v: spec.v, vertices })
}

/// A linear realization used to steer a sweep through residue classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuideSeq {
    pub vertices: Vec<usize>,
    pub diffs: Vec<usize>,
}

impl GuideSeq {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        let path = PathSeq::spanning(vertices)?;
        let diffs = path.diffs(crate::path::Mode::Linear);
        Ok(Self { vertices: path.vertices, diffs })
    }

    pub fn from_path(path: &PathSeq) -> Result<Self> {
        Self::new(path.vertices.clone())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}
