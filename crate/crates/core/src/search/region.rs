//! Counting which instances `{1^a, x^b, y^c}` of a fixed support and order
//! are covered by which sufficient condition, and sweeping that over `v`.

use crate::arith::gcd;
use crate::constructions::dispatch::citational;
use crate::constructions::multiple_tx::tx_hypotheses;
use crate::constructions::omega::omega;
use crate::constructions::shared::odd_x_applies;
use crate::constructions::Kind;
use crate::equivalence::{equivalent_forms, f_bound, Form};
use crate::error::{pre, Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A sufficient condition for realizability, evaluated on one form
/// `{1^A, X^B, Y^C}` of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `A ≥ X + Y`.
    SumBound,
    /// `A ≥ f(X, Y)`.
    RefinedBound,
    /// `v ≤ 37`.
    SmallOrder,
    /// `Y ≤ 7`, or support `{1, 2, 8|10|12}`.
    SmallMax,
    OddX,
    OddXEvenY,
    MultipleTx,
    StretchY,
    /// Any other published special case.
    Known,
}

pub const ALL_RULES: [Rule; 9] = [
    Rule::SumBound,
    Rule::RefinedBound,
    Rule::SmallOrder,
    Rule::SmallMax,
    Rule::OddX,
    Rule::OddXEvenY,
    Rule::MultipleTx,
    Rule::StretchY,
    Rule::Known,
];

/// Bounds, the two citational small cases, the refined bound, then odd `x`.
pub const DEFAULT_PIPELINE: [Rule; 5] =
    [Rule::SumBound, Rule::SmallOrder, Rule::SmallMax, Rule::RefinedBound, Rule::OddX];

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::SumBound => "sum-bound",
            Rule::RefinedBound => "refined-bound",
            Rule::SmallOrder => "small-order",
            Rule::SmallMax => "small-max",
            Rule::OddX => "odd-x",
            Rule::OddXEvenY => "odd-x-even-y",
            Rule::MultipleTx => "multiple-tx",
            Rule::StretchY => "stretch-y",
            Rule::Known => "known",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Rule::SumBound | Rule::SmallOrder | Rule::SmallMax | Rule::Known => Kind::Citational,
            _ => Kind::Constructive,
        }
    }

    fn is_bound(self) -> bool {
        matches!(self, Rule::SumBound | Rule::RefinedBound)
    }

    /// Whether the rule covers the form `{1^a, x^b, y^c}` at order `v`.
    pub fn covers(self, x: usize, y: usize, (a, b, c): (usize, usize, usize), v: usize) -> bool {
        match self {
            Rule::SumBound => a >= x + y,
            Rule::RefinedBound => a >= f_bound(x, y),
            Rule::SmallOrder => v <= 37,
            Rule::SmallMax => y <= 7 || (x == 2 && matches!(y, 8 | 10 | 12)),
            Rule::OddX => odd_x_applies(x, y, a, b),
            Rule::OddXEvenY => {
                x % 2 == 1
                    && y % 2 == 0
                    && 2 * x >= y
                    && x + 1 < y
                    && ((a + b + 1 == y && b % 2 == 0 && b < y - x) || (a >= 2 * x && b + x + 1 >= y))
            }
            Rule::MultipleTx => y % x == 0 && tx_hypotheses(x, y / x, a, b, c).any(),
            Rule::StretchY => {
                c % y <= 1 && ((a + b + 1 == y && a >= omega(x, b)) || (x == 3 && a >= 4 && a + b > y))
            }
            Rule::Known => citational(x, y, a, b, c, v).is_some(),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_RULES
            .into_iter()
            .find(|r| r.id() == s.trim())
            .ok_or_else(|| Error::Precondition(format!("unknown rule '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCount {
    pub rule: Rule,
    pub kind: Kind,
    pub covered: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub x: usize,
    pub y: usize,
    pub v: usize,
    /// Leading bound rule that delimits the candidate region, if any.
    pub bound: Option<Rule>,
    /// Instances excluded by the bound rule.
    pub bounded_out: usize,
    pub total_candidates: usize,
    pub per_rule: Vec<RuleCount>,
    /// Uncovered `(a, b, c)`, sorted.
    pub residual: Vec<(usize, usize, usize)>,
}

fn forms_for(x: usize, y: usize, v: usize) -> Result<Vec<Form>> {
    if !(1 < x && x < y && y <= v / 2) {
        return pre(format!("need 1 < x < y <= v/2, got x={x}, y={y}, v={v}"));
    }
    if gcd(x, v) != 1 || gcd(y, v) != 1 {
        let original = Form {
            x,
            y,
            ones: crate::equivalence::Exp::A,
            x_exp: crate::equivalence::Exp::B,
            y_exp: crate::equivalence::Exp::C,
            unit: 1,
            degenerate: false,
        };
        return Ok(vec![original]);
    }
    let eq = equivalent_forms(x, y, v)?;
    Ok(eq.all().into_iter().filter(|f| !f.degenerate).collect())
}

/// Index of the first pipeline rule covering `abc` on some form.
fn first_cover(pipeline: &[Rule], forms: &[Form], abc: (usize, usize, usize), v: usize) -> Option<usize> {
    pipeline.iter().position(|r| forms.iter().any(|f| r.covers(f.x, f.y, f.counts(abc), v)))
}

fn instances(v: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..v.saturating_sub(2)).flat_map(move |a| (1..v - 1 - a).map(move |b| (a, b, v - 1 - a - b)))
}

pub fn enumerate_region(x: usize, y: usize, v: usize, pipeline: &[Rule]) -> Result<CoverageReport> {
    let forms = forms_for(x, y, v)?;
    let bound = pipeline.first().copied().filter(|r| r.is_bound());
    let mut counts = vec![0usize; pipeline.len()];
    let mut residual = Vec::new();
    for abc in instances(v) {
        match first_cover(pipeline, &forms, abc, v) {
            Some(i) => counts[i] += 1,
            None => residual.push(abc),
        }
    }
    let skip = usize::from(bound.is_some());
    let bounded_out = if bound.is_some() { counts[0] } else { 0 };
    let per_rule: Vec<RuleCount> = pipeline
        .iter()
        .zip(&counts)
        .skip(skip)
        .map(|(&rule, &covered)| RuleCount { rule, kind: rule.kind(), covered })
        .collect();
    let total_candidates = per_rule.iter().map(|r| r.covered).sum::<usize>() + residual.len();
    Ok(CoverageReport { x, y, v, bound, bounded_out, total_candidates, per_rule, residual })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub v: usize,
    pub total_candidates: usize,
    pub residual: usize,
    /// Residual count after each pipeline prefix.
    pub residual_by_stage: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub x: usize,
    pub y: usize,
    pub pipeline: Vec<Rule>,
    pub entries: Vec<SweepEntry>,
    /// Orders with a nonempty residual under the full pipeline.
    pub unresolved: Vec<usize>,
    /// Orders left unresolved after each pipeline prefix.
    pub unresolved_by_stage: Vec<Vec<usize>>,
}

/// Sweeps every `v` in the range that is coprime to `x` and `y` and has
/// `y ≤ v/2`, in parallel; output order is by `v`.
pub fn sweep_support(
    x: usize,
    y: usize,
    vs: std::ops::RangeInclusive<usize>,
    pipeline: &[Rule],
) -> Result<SweepReport> {
    if !(1 < x && x < y) || pipeline.is_empty() {
        return pre("need 1 < x < y and a nonempty pipeline");
    }
    let orders: Vec<usize> =
        vs.filter(|&v| v >= 2 * y && gcd(v, x) == 1 && gcd(v, y) == 1).collect();
    let entries: Vec<SweepEntry> = orders
        .par_iter()
        .map(|&v| -> Result<SweepEntry> {
            let forms = forms_for(x, y, v)?;
            let mut by_stage = vec![0usize; pipeline.len()];
            let mut total = 0;
            let bounded = pipeline[0].is_bound();
            for abc in instances(v) {
                let first = first_cover(pipeline, &forms, abc, v);
                if !(bounded && first == Some(0)) {
                    total += 1;
                }
                let stop = first.unwrap_or(pipeline.len());
                for slot in by_stage.iter_mut().take(stop) {
                    *slot += 1;
                }
            }
            let residual = *by_stage.last().unwrap();
            Ok(SweepEntry { v, total_candidates: total, residual, residual_by_stage: by_stage })
        })
        .collect::<Result<_>>()?;
    let unresolved_by_stage: Vec<Vec<usize>> = (0..pipeline.len())
        .map(|k| entries.iter().filter(|e| e.residual_by_stage[k] > 0).map(|e| e.v).collect())
        .collect();
    let unresolved = unresolved_by_stage.last().cloned().unwrap_or_default();
    Ok(SweepReport { x, y, pipeline: pipeline.to_vec(), entries, unresolved, unresolved_by_stage })
}
