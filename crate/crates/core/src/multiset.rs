use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Multiset of positive edge lengths. Zero counts are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeMultiset {
    entries: BTreeMap<usize, usize>,
}

impl EdgeMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(length, count)` pairs; repeated lengths accumulate.
    ///
    /// # Panics
    /// Panics on a zero length.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (len, count) in pairs {
            m.add(len, count);
        }
        m
    }

    pub fn add(&mut self, len: usize, count: usize) {
        assert!(len >= 1, "edge lengths are positive");
        if count > 0 {
            *self.entries.entry(len).or_insert(0) += count;
        }
    }

    /// Removes up to `count` copies; returns false when fewer were present.
    pub fn remove(&mut self, len: usize, count: usize) -> bool {
        let Some(c) = self.entries.get_mut(&len) else {
            return count == 0;
        };
        if *c < count {
            return false;
        }
        *c -= count;
        if *c == 0 {
            self.entries.remove(&len);
        }
        true
    }

    pub fn count(&self, len: usize) -> usize {
        self.entries.get(&len).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries.keys().copied().collect()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().map(|(&l, &c)| (l, c))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (l, c) in other.iter() {
            m.add(l, c);
        }
        m
    }

    /// Every length multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Self {
        Self::from_pairs(self.iter().map(|(l, c)| (l * k, c)))
    }

    /// `{1^a, x^b, y^c}`, skipping empty parts.
    pub fn triple(x: usize, y: usize, a: usize, b: usize, c: usize) -> Self {
        Self::from_pairs([(1, a), (x, b), (y, c)])
    }
}

impl fmt::Display for EdgeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{c}")?;
            }
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for EdgeMultiset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_pairs(iter.into_iter().map(|l| (l, 1)))
    }
}
