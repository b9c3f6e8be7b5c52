//! Command surface of the `bhr` binary: argument definitions, the command
//! implementations and their exit statuses.

pub mod notation;
pub mod svg;

use anyhow::{anyhow, bail, Context, Result};
use bhr_core::constructions::{construct_any, omega_realization, omega_value, Verdict};
use bhr_core::equivalence::{equivalent_forms, region_bounds, BoundRule, Exp, Form, RegionBounds};
use bhr_core::path::lengths;
use bhr_core::search::region::{Rule, DEFAULT_PIPELINE};
use bhr_core::search::{dfs_realize, enumerate_region, sweep_support, SearchOutcome, SearchTask};
use bhr_core::verify::verify;
use bhr_core::{EdgeMultiset, Mode, PathSeq};
use clap::{Parser, Subcommand, ValueEnum};
use notation::{format_multiset, parse_multiset, parse_vertices, MultisetExpr};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

/// How a command finished; maps onto the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    NotCovered,
    Rejected,
    Budget,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NotCovered => 2,
            Status::Rejected => 3,
            Status::Budget => 5,
        }
    }
}

/// `region` without `--pipeline`: the plain bound delimits the candidates,
/// the odd-x construction covers what it can.
pub const REGION_PIPELINE: [Rule; 2] = [Rule::SumBound, Rule::OddX];

/// Parse errors and violated preconditions.
pub const CONTRACT_ERROR: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "bhr", version, about = "Realize edge-length multisets as Hamiltonian paths in complete graphs")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for region and sweep.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum ModeArg {
    Linear,
    Cyclic,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Linear => Mode::Linear,
            ModeArg::Cyclic => Mode::Cyclic,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum EndpointsArg {
    Free,
    Standard,
    Perfect,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Realize a multiset, or report why it is covered or not.
    Construct {
        multiset: String,
        #[arg(long)]
        v: Option<usize>,
        /// Also write a grid diagram of the path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check a path (inline, or a file such as `construct --json` output).
    Verify {
        path: String,
        /// Defaults to the multiset recorded alongside a JSON path.
        target: Option<String>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// The fewest 1-edges for `{1^ω, y^c}`, with a realization.
    Omega { y: usize, c: usize },
    /// The two unit-scaled companions of `{1, x, y}` at order v.
    Equiv { x: usize, y: usize, v: usize },
    /// Count the instances of one support and order by covering rule.
    Region {
        support: String,
        #[arg(long)]
        v: usize,
        /// Comma-separated rule ids, applied in order [default: sum-bound,odd-x].
        #[arg(long)]
        pipeline: Option<String>,
    },
    /// Region counts for every order up to --v.
    Sweep {
        support: String,
        #[arg(long)]
        v: usize,
        #[arg(long, default_value_t = 2)]
        v_min: usize,
        /// Comma-separated rule ids, applied in order
        /// [default: sum-bound,small-order,small-max,refined-bound,odd-x].
        #[arg(long)]
        pipeline: Option<String>,
    },
    /// Exhaustive search for a realization.
    Dfs {
        multiset: String,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Cyclic)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = EndpointsArg::Free)]
        endpoints: EndpointsArg,
        #[arg(long, default_value_t = bhr_core::search::dfs::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Draw a realization on a grid, columns taken modulo x (or y).
    Diagram {
        /// A multiset to construct, or with --path a vertex list or file.
        input: String,
        #[arg(long)]
        path: bool,
        #[arg(long)]
        v: Option<usize>,
        /// Column count; defaults to the second-smallest length.
        #[arg(long)]
        columns: Option<usize>,
        /// Use the largest length as the column count instead.
        #[arg(long)]
        use_y: bool,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

fn multiset_json(m: &EdgeMultiset) -> Value {
    Value::Array(m.iter().map(|(l, c)| json!([l, c])).collect())
}

fn emit(out: &mut dyn Write, json: bool, value: &Value, text: &str) -> Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    } else {
        write!(out, "{text}")?;
    }
    Ok(())
}

fn parse_pipeline(spec: Option<&str>, default: &[Rule]) -> Result<Vec<Rule>> {
    match spec {
        None => Ok(default.to_vec()),
        Some(s) => s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.parse::<Rule>().map_err(|e| anyhow!(e)))
            .collect(),
    }
}

/// `{1, x, y}` from notation such as `1,5,32`.
fn parse_support(src: &str) -> Result<(usize, usize)> {
    let m = parse_multiset(src).with_context(|| format!("parse error in support `{src}`"))?;
    match m.multiset.support()[..] {
        [1, x, y] => Ok((x, y)),
        _ => bail!("precondition failed: support must be {{1, x, y}} with 1 < x < y, got {}", format_multiset(&m.multiset)),
    }
}

fn parse_target(src: &str) -> Result<MultisetExpr> {
    parse_multiset(src).with_context(|| format!("parse error in multiset `{src}`"))
}

/// A path from inline text or a file; JSON files may also carry `v`,
/// `mode` and `multiset`.
struct PathInput {
    vertices: Vec<usize>,
    v: Option<usize>,
    mode: Option<Mode>,
    multiset: Option<EdgeMultiset>,
}

fn read_path(src: &str) -> Result<PathInput> {
    let text = if Path::new(src).is_file() {
        std::fs::read_to_string(src).with_context(|| format!("reading {src}"))?
    } else {
        src.to_string()
    };
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: Value = serde_json::from_str(trimmed).context("parse error in JSON path document")?;
        let vertices = doc
            .get("path")
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("parse error: JSON document has no `path` array"))?
            .iter()
            .map(|n| n.as_u64().map(|n| n as usize).ok_or_else(|| anyhow!("parse error: non-integer vertex {n}")))
            .collect::<Result<Vec<_>>>()?;
        let v = doc.get("v").and_then(Value::as_u64).map(|n| n as usize);
        let mode = match doc.get("mode").and_then(Value::as_str) {
            Some(m) => Some(m.parse::<Mode>().map_err(|e| anyhow!("parse error: {e}"))?),
            None => None,
        };
        let multiset = match doc.get("multiset").and_then(Value::as_array) {
            Some(pairs) => {
                let mut m = EdgeMultiset::new();
                for p in pairs {
                    let pair = p.as_array().filter(|p| p.len() == 2);
                    let nums = pair.and_then(|p| Some((p[0].as_u64()?, p[1].as_u64()?)));
                    let (l, c) = nums.ok_or_else(|| anyhow!("parse error: multiset entries must be [length, count]"))?;
                    m.add(l as usize, c as usize);
                }
                Some(m)
            }
            None => None,
        };
        return Ok(PathInput { vertices, v, mode, multiset });
    }
    let vertices = parse_vertices(&text).with_context(|| "parse error in path".to_string())?;
    Ok(PathInput { vertices, v: None, mode: None, multiset: None })
}

/// Second-smallest length by default, the largest with `use_y`.
fn default_columns(m: &EdgeMultiset, use_y: bool) -> usize {
    let support: Vec<usize> = m.support().into_iter().filter(|&l| l > 1).collect();
    let pick = if use_y { support.last() } else { support.first() };
    pick.copied().unwrap_or(2).max(2)
}

fn write_svg(file: &Path, path: &PathSeq, columns: usize) -> Result<()> {
    std::fs::write(file, svg::emit_diagram(path, columns)).with_context(|| format!("writing {}", file.display()))
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Status> {
    if let Some(n) = cli.threads {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let json = cli.json;
    match cli.command {
        Command::Construct { multiset, v, svg } => {
            let expr = parse_target(&multiset)?;
            let v = expr.order(v);
            let verdict = construct_any(&expr.multiset, v)?;
            let (status, kind) = match &verdict {
                Verdict::Constructive { .. } => (Status::Ok, "constructive"),
                Verdict::Citational { .. } => (Status::Ok, "citational"),
                Verdict::NotCovered { .. } => (Status::NotCovered, "not-covered"),
                Verdict::Rejected { .. } => (Status::Rejected, "rejected"),
            };
            let path = verdict.path();
            let verified = path.map(|p| verify(p, &expr.multiset, Mode::Cyclic).matches_target);
            let rule = verdict.certificate().map(|c| c.rule.clone());
            let (form, reason) = match &verdict {
                Verdict::Constructive { form, .. } | Verdict::Citational { form, .. } => (Some(form.clone()), None),
                Verdict::NotCovered { reason } | Verdict::Rejected { reason } => (None, Some(reason.clone())),
            };
            if let (Some(file), Some(p)) = (&svg, path) {
                write_svg(file, p, default_columns(&expr.multiset, false))?;
            }
            let value = json!({
                "v": v,
                "multiset": multiset_json(&expr.multiset),
                "status": kind,
                "rule": rule,
                "kind": verdict.certificate().map(|c| c.kind),
                "params": verdict.certificate().map(|c| &c.params),
                "form": form,
                "reason": reason,
                "mode": "cyclic",
                "path": path.map(|p| &p.vertices),
                "verified": verified,
            });
            let mut text = format!("{} at v={v}: {kind}", format_multiset(&expr.multiset));
            if let Some(rule) = &rule {
                text += &format!(" by {rule}");
            }
            if let Some(form) = &form {
                text += &format!(" (form {form})");
            }
            if let Some(reason) = &reason {
                text += &format!(": {reason}");
            }
            text.push('\n');
            if let Some(p) = path {
                text += &format!("path: {:?}\nverified: {}\n", p.vertices, verified.unwrap_or(false));
            }
            emit(out, json, &value, &text)?;
            Ok(status)
        }
        Command::Verify { path, target, v, mode } => {
            let input = read_path(&path)?;
            let target = match (&target, &input.multiset) {
                (Some(t), _) => parse_target(t)?.multiset,
                (None, Some(m)) => m.clone(),
                (None, None) => bail!("precondition failed: no target multiset given"),
            };
            let v = v.or(input.v).unwrap_or(input.vertices.len());
            let mode = mode.map(Mode::from).or(input.mode).unwrap_or(Mode::Linear);
            let p = PathSeq::new(v, input.vertices)?;
            let report = verify(&p, &target, mode);
            let value = json!({
                "v": v,
                "mode": mode,
                "multiset": multiset_json(&target),
                "path": &p.vertices,
                "is_path": report.is_path,
                "is_hamiltonian": report.is_hamiltonian,
                "is_standard": report.is_standard,
                "is_perfect": report.is_perfect,
                "realized": multiset_json(&report.realized),
                "first_mismatch": report.first_mismatch,
                "verified": report.matches_target,
            });
            let mut text = format!(
                "verified: {}\nhamiltonian: {}, standard: {}, perfect: {}\nrealized: {}\n",
                report.matches_target,
                report.is_hamiltonian,
                report.is_standard,
                report.is_perfect,
                format_multiset(&report.realized)
            );
            if let Some((l, want, got)) = report.first_mismatch {
                text += &format!("first mismatch: length {l}, expected {want}, found {got}\n");
            }
            emit(out, json, &value, &text)?;
            Ok(if report.matches_target { Status::Ok } else { Status::NotCovered })
        }
        Command::Omega { y, c } => {
            let case = omega_value(y, c)?;
            let r = omega_realization(y, c)?;
            let value = json!({
                "y": y,
                "c": c,
                "qprime": case.qprime,
                "rprime": case.rprime,
                "omega": case.value,
                "pattern": case.pattern.name(),
                "path": &r.path.vertices,
            });
            let text = format!(
                "ω({y}, {c}) = {} via {} (q' = {}, r' = {})\npath: {:?}\n",
                case.value,
                case.pattern.name(),
                case.qprime,
                case.rprime,
                r.path.vertices
            );
            emit(out, json, &value, &text)?;
            Ok(Status::Ok)
        }
        Command::Equiv { x, y, v } => {
            let eq = equivalent_forms(x, y, v)?;
            let plain = region_bounds(x, y, v, BoundRule::Plain)?;
            let refined = region_bounds(x, y, v, BoundRule::Refined)?;
            let names = ["original", "form-a", "form-b"];
            let forms: Vec<Value> = names.iter().zip(eq.all()).map(|(n, f)| form_json(n, &f)).collect();
            let value = json!({ "v": v, "forms": forms, "plain": plain, "refined": refined });
            let mut text = String::new();
            for (n, f) in names.iter().zip(eq.all()) {
                text += &format!("{n:<9} {}{}\n", form_text(&f), if f.degenerate { "  (degenerate)" } else { "" });
            }
            text += &bounds_text("plain", &plain);
            text += &bounds_text("refined", &refined);
            emit(out, json, &value, &text)?;
            Ok(Status::Ok)
        }
        Command::Region { support, v, pipeline } => {
            let (x, y) = parse_support(&support)?;
            let pipeline = parse_pipeline(pipeline.as_deref(), &REGION_PIPELINE)?;
            let r = enumerate_region(x, y, v, &pipeline)?;
            let mut text = format!("{{1,{x},{y}}} at v={v}: {} candidates", r.total_candidates);
            if let Some(b) = r.bound {
                text += &format!(" ({} excluded by {b})", r.bounded_out);
            }
            text.push('\n');
            for rc in &r.per_rule {
                text += &format!("  {:<14} {}\n", rc.rule.id(), rc.covered);
            }
            text += &format!("  residual       {}\n", r.residual.len());
            for t in &r.residual {
                text += &format!("    {t:?}\n");
            }
            emit(out, json, &serde_json::to_value(&r)?, &text)?;
            Ok(if r.residual.is_empty() { Status::Ok } else { Status::NotCovered })
        }
        Command::Sweep { support, v, v_min, pipeline } => {
            let (x, y) = parse_support(&support)?;
            let pipeline = parse_pipeline(pipeline.as_deref(), &DEFAULT_PIPELINE)?;
            let s = sweep_support(x, y, v_min..=v, &pipeline)?;
            let mut text = format!("{{1,{x},{y}}} for v in {v_min}..={v}: {} orders\n", s.entries.len());
            for (rule, left) in pipeline.iter().zip(&s.unresolved_by_stage) {
                text += &format!("  after {:<14} {:>4} unresolved\n", rule.id(), left.len());
            }
            text += &format!("unresolved: {:?}\n", s.unresolved);
            emit(out, json, &serde_json::to_value(&s)?, &text)?;
            Ok(if s.unresolved.is_empty() { Status::Ok } else { Status::NotCovered })
        }
        Command::Dfs { multiset, v, mode, endpoints, budget } => {
            let expr = parse_target(&multiset)?;
            let v = expr.order(v);
            let mut task = SearchTask::new(expr.multiset.clone(), v, mode.into()).with_budget(budget);
            task = match endpoints {
                EndpointsArg::Free => task,
                EndpointsArg::Standard => task.standard(),
                EndpointsArg::Perfect => task.perfect(),
            };
            let rep = dfs_realize(&task)?;
            let (status, word) = match &rep.outcome {
                SearchOutcome::Found { .. } => (Status::Ok, "found"),
                SearchOutcome::Exhausted => (Status::NotCovered, "none"),
                SearchOutcome::BudgetExceeded => (Status::Budget, "budget"),
            };
            let path = rep.found().map(|p| &p.vertices);
            let value = json!({
                "v": v,
                "multiset": multiset_json(&expr.multiset),
                "mode": Mode::from(mode),
                "outcome": word,
                "nodes": rep.nodes,
                "path": path,
            });
            let mut text = format!("{} at v={v}: {word} after {} nodes\n", format_multiset(&expr.multiset), rep.nodes);
            if let Some(p) = path {
                text += &format!("path: {p:?}\n");
            }
            emit(out, json, &value, &text)?;
            Ok(status)
        }
        Command::Diagram { input, path, v, columns, use_y, svg } => {
            let (p, m) = if path {
                let inp = read_path(&input)?;
                let v = v.or(inp.v).unwrap_or(inp.vertices.len());
                let p = PathSeq::new(v, inp.vertices)?;
                let m = match inp.multiset {
                    Some(m) => m,
                    None if p.len() > 1 => lengths(&p, Mode::Linear)?,
                    None => EdgeMultiset::new(),
                };
                (p, m)
            } else {
                let expr = parse_target(&input)?;
                let v = expr.order(v);
                match construct_any(&expr.multiset, v)? {
                    Verdict::Constructive { path, .. } => (path, expr.multiset),
                    Verdict::Rejected { reason } => {
                        writeln!(out, "rejected: {reason}")?;
                        return Ok(Status::Rejected);
                    }
                    _ => {
                        writeln!(out, "no constructive realization to draw")?;
                        return Ok(Status::NotCovered);
                    }
                }
            };
            let columns = columns.unwrap_or_else(|| default_columns(&m, use_y));
            if columns < 2 {
                bail!("precondition failed: column count must be at least 2");
            }
            match svg {
                Some(file) => {
                    write_svg(&file, &p, columns)?;
                    if json {
                        writeln!(out, "{}", json!({ "svg": file, "columns": columns, "v": p.v }))?;
                    }
                }
                None => write!(out, "{}", svg::emit_diagram(&p, columns))?,
            }
            Ok(Status::Ok)
        }
    }
}

fn exp_name(e: Exp) -> &'static str {
    match e {
        Exp::A => "a",
        Exp::B => "b",
        Exp::C => "c",
    }
}

fn form_text(f: &Form) -> String {
    format!("{{1^{}, {}^{}, {}^{}}}  unit {}", exp_name(f.ones), f.x, exp_name(f.x_exp), f.y, exp_name(f.y_exp), f.unit)
}

fn form_json(name: &str, f: &Form) -> Value {
    json!({
        "name": name,
        "support": [1, f.x, f.y],
        "exponents": [exp_name(f.ones), exp_name(f.x_exp), exp_name(f.y_exp)],
        "unit": f.unit,
        "degenerate": f.degenerate,
    })
}

fn bounds_text(label: &str, b: &RegionBounds) -> String {
    let show = |t: Option<usize>| t.map_or("-".to_string(), |n| n.to_string());
    format!(
        "{label:<9} thresholds a≥{} b≥{} c≥{}, sum {}, certified {}\n",
        show(b.thresholds[0]),
        show(b.thresholds[1]),
        show(b.thresholds[2]),
        show(b.threshold_sum),
        b.certified
    )
}
