//! Command front end: turns a [`RunSpec`] into report text and an exit code.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin wrapper and tests can compare output byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{evaluate, BoundReport, TheoremId, Variant};
use crate::convexity::{
    check_coordinated_r_convex, check_jointly_r_convex, check_r_convex_1d, transform,
    ConvexityVerdict, GridSpec,
};
use crate::corpus::{Base1d, Base2d};
use crate::error::{Error, Result};
use crate::funcmodel::{parse_expr, Domain, Interval, PositiveFunction, Rectangle};
use crate::means::RParam;
use crate::numfmt::{self, sig17};
use crate::quadrature::QuadratureConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

/// Offset between the seeded streams used for `f` and `g` in a search.
const G_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Verify,
    Sweep,
    Search,
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Input(format!("unknown format `{other}`"))),
        }
    }
}

/// `lo:hi:n`, `n` equally spaced values including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RGrid {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl RGrid {
    pub fn values(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n)
            .map(|i| {
                if i + 1 == self.n {
                    self.hi
                } else {
                    self.lo + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for RGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGrid(format!("expected lo:hi:n, got `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(bad());
        };
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(Error::InvalidGrid("r-grid is empty".into()));
        }
        if !(lo.is_finite() && hi.is_finite()) || lo > hi {
            return Err(Error::InvalidGrid(format!(
                "r-grid bounds {lo}:{hi} are not ordered"
            )));
        }
        Ok(RGrid { lo, hi, n })
    }
}

/// Parses `a,b` or `a,b,c,d`.
pub fn parse_domain(s: &str) -> Result<Domain> {
    let vals = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::Input(format!("bad domain endpoint `{p}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    match vals[..] {
        [a, b] => Ok(Interval::new(a, b)?.into()),
        [a, b, c, d] => Ok(Rectangle::from_bounds(a, b, c, d)?.into()),
        _ => Err(Error::Input(format!(
            "domain needs 2 or 4 endpoints, got {}",
            vals.len()
        ))),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub command: Command,
    pub f: Option<String>,
    pub g: Option<String>,
    /// Unit interval or unit square when absent.
    pub domain: Option<Domain>,
    pub theorem: Option<TheoremId>,
    pub r: Option<f64>,
    pub r2: Option<f64>,
    pub r_grid: Option<RGrid>,
    pub variant: Variant,
    pub quadrature: QuadratureConfig,
    pub seed: u64,
    pub format: Format,
    /// Corpus size per r value for `search`.
    pub instances: usize,
    /// Grid points per axis for `check`.
    pub points: usize,
    /// `check` uses the joint (tensor-weight) notion instead of partial maps.
    pub joint: bool,
}

impl RunSpec {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            f: None,
            g: None,
            domain: None,
            theorem: None,
            r: None,
            r2: None,
            r_grid: None,
            variant: Variant::Printed,
            quadrature: QuadratureConfig::default(),
            seed: 0,
            format: Format::Json,
            instances: 200,
            points: GridSpec::default().points_per_axis,
            joint: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn report(stdout: String, ok: bool) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: if ok { EXIT_OK } else { EXIT_VIOLATION },
        }
    }

    fn input_error(e: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
        }
    }
}

/// Runs `spec`; any error becomes exit code 1 with its message on stderr.
pub fn run(spec: &RunSpec) -> Outcome {
    let result = spec
        .quadrature
        .validate()
        .and_then(|()| match spec.command {
            Command::Check => run_check(spec),
            Command::Verify => run_verify(spec),
            Command::Sweep => run_sweep(spec),
            Command::Search => run_search(spec),
            Command::Chain => run_chain(spec),
        });
    result.unwrap_or_else(|e| Outcome::input_error(&e))
}

fn unit_domain(arity: usize) -> Domain {
    if arity == 1 {
        Interval::new(0.0, 1.0).expect("unit interval").into()
    } else {
        Rectangle::unit().into()
    }
}

fn required<'a>(field: &'a Option<String>, flag: &str) -> Result<&'a str> {
    field
        .as_deref()
        .ok_or_else(|| Error::Input(format!("missing --{flag}")))
}

/// Parses `--f` (and `--g` when present) onto the requested or default domain.
fn functions(spec: &RunSpec) -> Result<(PositiveFunction, Option<PositiveFunction>)> {
    let f_text = required(&spec.f, "f")?;
    let f_expr = parse_expr(f_text)?;
    let g_expr = spec.g.as_deref().map(parse_expr).transpose()?;
    let domain = match spec.domain {
        Some(d) => d,
        None => {
            let uses_y = f_expr.uses_y() || g_expr.as_ref().is_some_and(|g| g.uses_y());
            let arity = match spec.theorem {
                Some(t) => t.arity(),
                None if uses_y => 2,
                None => 1,
            };
            unit_domain(arity)
        }
    };
    let f = PositiveFunction::from_expr(f_expr, domain)?;
    let g = g_expr
        .map(|e| PositiveFunction::from_expr(e, domain))
        .transpose()?;
    Ok((f, g))
}

fn theorem(spec: &RunSpec) -> Result<TheoremId> {
    spec.theorem
        .ok_or_else(|| Error::Input("missing --theorem".into()))
}

pub const CSV_HEADER: &str = "theorem,variant,r1,r2,lhs,rhs,slack,quad_error,satisfied";

fn opt_num(v: Option<f64>) -> String {
    v.map(sig17).unwrap_or_default()
}

fn csv_row(rep: &BoundReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        rep.theorem,
        rep.variant,
        opt_num(rep.params.r1),
        opt_num(rep.params.r2),
        sig17(rep.lhs),
        sig17(rep.rhs),
        sig17(rep.slack),
        sig17(rep.quad_error),
        rep.satisfied
    )
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Input(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    /// `line`, `coordinated` or `joint`.
    pub mode: String,
    pub function: String,
    pub verdict: ConvexityVerdict,
}

/// Convexity check at `--r`: one-variable functions on the line, two-variable
/// functions coordinate-wise (or jointly with `--joint`).
pub fn run_check(spec: &RunSpec) -> Result<Outcome> {
    let (f, _) = functions(spec)?;
    let r = RParam::new(spec.r.ok_or_else(|| Error::Input("missing --r".into()))?)?;
    let grid = GridSpec::with_points(spec.points)?;
    let (mode, verdict) = match (f.arity(), spec.joint) {
        (1, _) => ("line", check_r_convex_1d(&f, r, &grid)?),
        (_, false) => ("coordinated", check_coordinated_r_convex(&f, r, &grid)?),
        (_, true) => ("joint", check_jointly_r_convex(&f, r, &grid)?),
    };
    let passed = verdict.passed;
    let stdout = match spec.format {
        Format::Json => to_json(&CheckReport {
            mode: mode.into(),
            function: f.to_string(),
            verdict,
        })?,
        Format::Csv => {
            let (wl, wr) = verdict
                .witness
                .as_ref()
                .map(|w| (sig17(w.lhs()), sig17(w.rhs())))
                .unwrap_or_default();
            format!(
                "mode,r,passed,tolerance,witness_lhs,witness_rhs\n{mode},{},{},{},{wl},{wr}\n",
                sig17(verdict.r),
                verdict.passed,
                sig17(verdict.tolerance)
            )
        }
    };
    Ok(Outcome::report(stdout, passed))
}

/// Evaluates one bound for one function (pair).
pub fn run_verify(spec: &RunSpec) -> Result<Outcome> {
    let t = theorem(spec)?;
    let (f, g) = functions(spec)?;
    if t == TheoremId::Chain {
        return run_chain(spec);
    }
    let rep = evaluate(
        t,
        &f,
        g.as_ref(),
        spec.r,
        spec.r2,
        spec.quadrature,
        spec.variant,
    )?;
    let stdout = match spec.format {
        Format::Json => to_json(&rep)?,
        Format::Csv => format!("{CSV_HEADER}\n{}\n", csv_row(&rep)),
    };
    Ok(Outcome::report(stdout, rep.satisfied))
}

/// The five-term chain for one two-variable function.
pub fn run_chain(spec: &RunSpec) -> Result<Outcome> {
    let (f, _) = functions(spec)?;
    let rep = evaluate(
        TheoremId::Chain,
        &f,
        None,
        None,
        None,
        spec.quadrature,
        Variant::Printed,
    )?;
    let stdout = match spec.format {
        Format::Json => to_json(&rep)?,
        Format::Csv => {
            let chain = rep.chain.as_deref().unwrap_or_default();
            let slacks = rep.pairwise_slacks.as_deref().unwrap_or_default();
            let mut out = String::from("step,value,slack_to_next\n");
            for (k, v) in chain.iter().enumerate() {
                let next = slacks.get(k).map(|s| sig17(*s)).unwrap_or_default();
                let _ = writeln!(out, "{},{},{next}", k + 1, sig17(*v));
            }
            out
        }
    };
    Ok(Outcome::report(stdout, rep.satisfied))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    #[serde(serialize_with = "numfmt::serialize")]
    pub r: f64,
    #[serde(serialize_with = "numfmt::serialize_opt")]
    pub r2: Option<f64>,
    #[serde(serialize_with = "numfmt::serialize")]
    pub lhs: f64,
    #[serde(serialize_with = "numfmt::serialize")]
    pub rhs_printed: f64,
    #[serde(serialize_with = "numfmt::serialize")]
    pub rhs_derived: f64,
    #[serde(serialize_with = "numfmt::serialize")]
    pub slack_printed: f64,
    #[serde(serialize_with = "numfmt::serialize")]
    pub slack_derived: f64,
    pub satisfied_printed: bool,
    pub satisfied_derived: bool,
}

pub const SWEEP_HEADER: &str =
    "r,lhs,rhs_printed,rhs_derived,slack_printed,slack_derived,satisfied_printed,satisfied_derived";

fn r_values(spec: &RunSpec) -> Result<Vec<f64>> {
    match (spec.r_grid, spec.r) {
        (Some(grid), _) => Ok(grid.values()),
        (None, Some(r)) => Ok(vec![r]),
        (None, None) => Err(Error::Input("missing --r or --r-grid".into())),
    }
}

/// Both variants of one bound at every r of the grid, ascending.
pub fn run_sweep(spec: &RunSpec) -> Result<Outcome> {
    let t = theorem(spec)?;
    if t == TheoremId::Chain {
        return Err(Error::Input("the chain has no r to sweep".into()));
    }
    let (f, g) = functions(spec)?;
    let rows = r_values(spec)?
        .par_iter()
        .map(|&r| {
            let at = |v| evaluate(t, &f, g.as_ref(), Some(r), spec.r2, spec.quadrature, v);
            let (p, d) = (at(Variant::Printed)?, at(Variant::DerivedConstant)?);
            Ok(SweepRow {
                r,
                r2: p.params.r2,
                lhs: p.lhs,
                rhs_printed: p.rhs,
                rhs_derived: d.rhs,
                slack_printed: p.slack,
                slack_derived: d.slack,
                satisfied_printed: p.satisfied,
                satisfied_derived: d.satisfied,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = rows.iter().all(|row| match spec.variant {
        Variant::Printed => row.satisfied_printed,
        Variant::DerivedConstant => row.satisfied_derived,
    });
    let stdout = match spec.format {
        Format::Json => to_json(&rows)?,
        Format::Csv => {
            let mut out = format!("{SWEEP_HEADER}\n");
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    sig17(row.r),
                    sig17(row.lhs),
                    sig17(row.rhs_printed),
                    sig17(row.rhs_derived),
                    sig17(row.slack_printed),
                    sig17(row.slack_derived),
                    row.satisfied_printed,
                    row.satisfied_derived
                );
            }
            out
        }
    };
    Ok(Outcome::report(stdout, ok))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchViolation {
    pub function: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(serialize_with = "numfmt::serialize")]
    pub r: f64,
    pub report: BoundReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub theorem: TheoremId,
    pub variant: Variant,
    pub seed: u64,
    pub r_values: Vec<f64>,
    pub instances_tried: usize,
    pub violations: Vec<SearchViolation>,
    /// The violation with the most negative slack.
    pub minimal_violation: Option<SearchViolation>,
}

/// Class members for one search: seeded convex bases pushed through the
/// r-class generators, `f` at `r1` and `g` at `r2`. Both lists start with the
/// constant 1.
pub fn search_corpus(
    theorem: TheoremId,
    domain: Domain,
    seed: u64,
    n: usize,
    r1: RParam,
    r2: RParam,
) -> Vec<(PositiveFunction, PositiveFunction)> {
    let bases: Vec<(PositiveFunction, PositiveFunction)> = match domain {
        Domain::Line(iv) => Base1d::corpus(seed, iv, n)
            .iter()
            .zip(Base1d::corpus(seed ^ G_STREAM, iv, n).iter())
            .map(|(a, b)| (a.function(iv), b.function(iv)))
            .collect(),
        Domain::Rect(rect) => Base2d::corpus(seed, rect, n)
            .iter()
            .zip(Base2d::corpus(seed ^ G_STREAM, rect, n).iter())
            .map(|(a, b)| (a.function(rect), b.function(rect)))
            .collect(),
    };
    if theorem == TheoremId::Chain {
        return bases;
    }
    bases
        .into_iter()
        .map(|(f, g)| (transform(&f, r1), transform(&g, r2)))
        .collect()
}

/// Seeded counterexample search over the r values of `--r-grid` (or `--r`).
pub fn search(spec: &RunSpec) -> Result<SearchResult> {
    let t = theorem(spec)?;
    let domain = spec.domain.unwrap_or_else(|| unit_domain(t.arity()));
    if domain.arity() != t.arity() {
        return Err(Error::WrongArity {
            expected: t.arity(),
            found: domain.arity(),
        });
    }
    let rs = if t == TheoremId::Chain {
        vec![1.0]
    } else {
        r_values(spec)?
    };
    let mut violations = Vec::new();
    for &r in &rs {
        let r1 = RParam::new(r)?;
        let r2v = spec
            .r2
            .unwrap_or(if t.is_holder() { r / (r - 1.0) } else { r });
        let r2 = RParam::new(r2v)?;
        let corpus = search_corpus(t, domain, spec.seed, spec.instances, r1, r2);
        let reports = corpus
            .par_iter()
            .map(|(f, g)| {
                let g = t.takes_pair().then_some(g);
                evaluate(t, f, g, Some(r), Some(r2v), spec.quadrature, spec.variant)
            })
            .collect::<Result<Vec<_>>>()?;
        for ((f, g), report) in corpus.iter().zip(reports) {
            if !report.satisfied {
                violations.push(SearchViolation {
                    function: f.to_string(),
                    g: t.takes_pair().then(|| g.to_string()),
                    r,
                    report,
                });
            }
        }
    }
    let minimal_violation = violations
        .iter()
        .min_by(|a, b| a.report.slack.total_cmp(&b.report.slack))
        .cloned();
    Ok(SearchResult {
        theorem: t,
        variant: spec.variant,
        seed: spec.seed,
        instances_tried: spec.instances * rs.len(),
        r_values: rs,
        violations,
        minimal_violation,
    })
}

pub fn run_search(spec: &RunSpec) -> Result<Outcome> {
    let result = search(spec)?;
    let stdout = match spec.format {
        Format::Json => to_json(&result)?,
        Format::Csv => {
            let mut out = format!("{CSV_HEADER}\n");
            for v in &result.violations {
                let _ = writeln!(out, "{}", csv_row(&v.report));
            }
            out
        }
    };
    Ok(Outcome::report(stdout, result.violations.is_empty()))
}
