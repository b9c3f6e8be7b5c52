//! Exhaustive depth-first search for Hamiltonian paths with a prescribed
//! multiset of edge lengths. Independent of the constructions; used as an
//! oracle.

use crate::error::{pre, Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{Mode, PathSeq};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoints {
    #[default]
    Free,
    /// First vertex 0.
    Standard,
    /// First vertex 0, last vertex `v - 1`.
    Perfect,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTask {
    pub target: EdgeMultiset,
    pub v: usize,
    pub mode: Mode,
    pub endpoints: Endpoints,
    /// Node limit.
    pub budget: u64,
    /// Reject linear `{1, x, y}` searches with `a + b < y - 1` up front.
    pub hop_prune: bool,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

impl SearchTask {
    pub fn new(target: EdgeMultiset, v: usize, mode: Mode) -> Self {
        Self { target, v, mode, endpoints: Endpoints::Free, budget: DEFAULT_BUDGET, hop_prune: true }
    }

    pub fn standard(mut self) -> Self {
        self.endpoints = Endpoints::Standard;
        self
    }

    pub fn perfect(mut self) -> Self {
        self.endpoints = Endpoints::Perfect;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SearchOutcome {
    Found { path: PathSeq },
    /// The whole space was searched; no realization exists.
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

impl SearchReport {
    pub fn found(&self) -> Option<&PathSeq> {
        match &self.outcome {
            SearchOutcome::Found { path } => Some(path),
            _ => None,
        }
    }
}

struct State<'a> {
    task: &'a SearchTask,
    lens: Vec<usize>,
    left: Vec<usize>,
    used: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl State<'_> {
    fn neighbours(&self, u: usize, len: usize) -> [Option<usize>; 2] {
        let v = self.task.v;
        match self.task.mode {
            Mode::Linear => [u.checked_sub(len), Some(u + len).filter(|&w| w < v)],
            Mode::Cyclic => {
                let up = (u + len) % v;
                let down = (u + v - len) % v;
                [Some(down), Some(up).filter(|&w| w != down)]
            }
        }
    }

    fn go(&mut self) -> Step {
        let v = self.task.v;
        if self.path.len() == v {
            let ok = self.task.endpoints != Endpoints::Perfect || self.path[v - 1] == v - 1;
            return if ok { Step::Found } else { Step::Dead };
        }
        self.nodes += 1;
        if self.nodes > self.task.budget {
            return Step::OutOfBudget;
        }
        let u = *self.path.last().unwrap();
        let mut order: Vec<usize> = (0..self.lens.len()).filter(|&i| self.left[i] > 0).collect();
        order.sort_by_key(|&i| (self.left[i], self.lens[i]));
        let last_slot = self.path.len() + 1 == v;
        for i in order {
            for w in self.neighbours(u, self.lens[i]).into_iter().flatten() {
                if self.used[w] {
                    continue;
                }
                if self.task.endpoints == Endpoints::Perfect && w == v - 1 && !last_slot {
                    continue;
                }
                self.used[w] = true;
                self.left[i] -= 1;
                self.path.push(w);
                match self.go() {
                    Step::Dead => {}
                    done => return done,
                }
                self.path.pop();
                self.left[i] += 1;
                self.used[w] = false;
            }
        }
        Step::Dead
    }
}

/// Searches for a Hamiltonian path on `[0, v)` realizing the target.
pub fn dfs_realize(task: &SearchTask) -> Result<SearchReport> {
    let v = task.v;
    if v == 0 || task.target.size() + 1 != v {
        return Err(Error::SizeMismatch { size: task.target.size(), expected: v.saturating_sub(1) });
    }
    if task.budget == 0 {
        return pre("node budget must be positive");
    }
    if task.target.support().iter().any(|&l| l >= v) {
        return Ok(SearchReport { outcome: SearchOutcome::Exhausted, nodes: 0 });
    }
    if task.hop_prune && task.mode == Mode::Linear {
        let sup = task.target.support();
        if sup.len() >= 2 && sup.len() <= 3 && sup[0] == 1 {
            let y = *sup.last().unwrap();
            if task.target.size() - task.target.count(y) + 1 < y {
                return Ok(SearchReport { outcome: SearchOutcome::Exhausted, nodes: 0 });
            }
        }
    }
    let starts: Vec<usize> = match (task.endpoints, task.mode) {
        (Endpoints::Free, Mode::Linear) => (0..=(v - 1) / 2).collect(),
        _ => vec![0],
    };
    let lens = task.target.support();
    let left = lens.iter().map(|&l| task.target.count(l)).collect();
    let mut st = State { task, lens, left, used: vec![false; v], path: Vec::with_capacity(v), nodes: 0 };
    for s in starts {
        st.used[s] = true;
        st.path.push(s);
        match st.go() {
            Step::Found => {
                let path = PathSeq::new(v, st.path.clone())?;
                return Ok(SearchReport { outcome: SearchOutcome::Found { path }, nodes: st.nodes });
            }
            Step::OutOfBudget => return Ok(SearchReport { outcome: SearchOutcome::BudgetExceeded, nodes: st.nodes }),
            Step::Dead => {}
        }
        st.path.pop();
        st.used[s] = false;
    }
    Ok(SearchReport { outcome: SearchOutcome::Exhausted, nodes: st.nodes })
}
