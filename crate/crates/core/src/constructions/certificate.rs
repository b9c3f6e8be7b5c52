use crate::error::{Error, Result};
use crate::multiset::EdgeMultiset;
use crate::path::{Mode, PathSeq};
use crate::verify::verify;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Backed by an explicit, verified path.
    Constructive,
    /// Backed only by a published result.
    Citational,
}

/// Which rule produced a result and with which parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub rule: String,
    pub kind: Kind,
    pub params: BTreeMap<String, String>,
}

impl Certificate {
    pub fn constructive(rule: &str) -> Self {
        Self { rule: rule.into(), kind: Kind::Constructive, params: BTreeMap::new() }
    }

    pub fn citational(rule: &str) -> Self {
        Self { rule: rule.into(), kind: Kind::Citational, params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }
}

/// A path together with the multiset it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub path: PathSeq,
    pub target: EdgeMultiset,
    pub certificate: Certificate,
}

impl Realization {
    /// Builds a realization, refusing any path that does not realize `target`.
    pub fn checked(path: PathSeq, target: EdgeMultiset, certificate: Certificate) -> Result<Self> {
        post_verify(&certificate.rule, &path, &target, Mode::Linear)?;
        Ok(Self { path, target, certificate })
    }
}

pub(crate) fn post_verify(rule: &str, path: &PathSeq, target: &EdgeMultiset, mode: Mode) -> Result<()> {
    let report = verify(path, target, mode);
    if report.matches_target {
        return Ok(());
    }
    let detail = match report.first_mismatch {
        Some((len, want, got)) => format!("length {len}: wanted {want}, got {got}"),
        None if !report.is_hamiltonian => "not a Hamiltonian path".into(),
        None => "multiset mismatch".into(),
    };
    Err(Error::PostVerify { rule: rule.into(), detail })
}
