//! Evaluators for both sides of the Hadamard-type bounds.
//!
//! Every evaluator integrates with [`crate::quadrature`] and returns a
//! [`BoundReport`]. Boundary integrands such as
//! `x ↦ (f(x,c)^r + f(x,d)^r)^{1/r}` are composed pointwise through
//! [`crate::means`], never expanded symbolically.
//!
//! The `printed` variant evaluates each bound exactly as published. The
//! `derived_constant` variant replaces the constants `(r/(r+1))^{1/r}` and
//! `(r/(r+2))^{2/r}` by `r/(r+1)` and `r/(r+2)`, which is what integrating
//! the r-convexity inequality along a segment actually yields; the two
//! agree at `r = 1` (resp. `r = 2`). For the coordinated Hölder bound the
//! derived variant raises the averaged power means to `r₁`, `r₂` before
//! averaging, i.e. the form whose `r₁ = r₂ = 2` instance is the
//! square-root corollary.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::funcmodel::{Interval, PositiveFunction, Rectangle};
use crate::means::{power_mean, power_sum_root, RParam};
use crate::numfmt;
use crate::quadrature::{integrate_2d, integrate_fn_1d, IntegralResult, QuadratureConfig};

/// Relative part of the tolerance used to decide `satisfied`.
pub const REPORT_RTOL: f64 = 1e-9;

/// Maximum `|1/r + 1/s − 1|` accepted for Hölder conjugates.
pub const CONJUGACY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// One-variable Hadamard bound for r-convex `f`, `0 < r ≤ 1`.
    #[serde(rename = "T1_1")]
    Hadamard1d,
    /// Product of an r-convex and an s-convex function, `0 < r, s ≤ 2`.
    #[serde(rename = "T1_2")]
    Product1d,
    /// Product bound with Hölder-conjugate exponents.
    #[serde(rename = "T1_3")]
    Holder1d,
    /// Coordinated r-convex bound on a rectangle.
    #[serde(rename = "T2_1")]
    Coord,
    /// Coordinated product bound.
    #[serde(rename = "T2_4")]
    CoordProduct,
    /// Coordinated Hölder bound.
    #[serde(rename = "T2_7")]
    CoordHolder,
    /// The five-term chain for coordinated convex functions.
    #[serde(rename = "CHAIN_1_4")]
    Chain,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Hadamard1d,
        TheoremId::Product1d,
        TheoremId::Holder1d,
        TheoremId::Coord,
        TheoremId::CoordProduct,
        TheoremId::CoordHolder,
        TheoremId::Chain,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::Hadamard1d => "T1_1",
            TheoremId::Product1d => "T1_2",
            TheoremId::Holder1d => "T1_3",
            TheoremId::Coord => "T2_1",
            TheoremId::CoordProduct => "T2_4",
            TheoremId::CoordHolder => "T2_7",
            TheoremId::Chain => "CHAIN_1_4",
        }
    }

    /// Number of variables of the functions involved.
    pub fn arity(self) -> usize {
        match self {
            TheoremId::Hadamard1d | TheoremId::Product1d | TheoremId::Holder1d => 1,
            _ => 2,
        }
    }

    /// Whether the bound involves a second function `g`.
    pub fn takes_pair(self) -> bool {
        matches!(
            self,
            TheoremId::Product1d
                | TheoremId::Holder1d
                | TheoremId::CoordProduct
                | TheoremId::CoordHolder
        )
    }

    pub fn is_holder(self) -> bool {
        matches!(self, TheoremId::Holder1d | TheoremId::CoordHolder)
    }

    pub fn has_derived_variant(self) -> bool {
        !matches!(self, TheoremId::Holder1d | TheoremId::Chain)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace(['.', '-'], "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.code() == norm || (norm == "CHAIN" && *t == TheoremId::Chain))
            .ok_or_else(|| Error::Input(format!("unknown theorem id `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    #[default]
    Printed,
    DerivedConstant,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Printed => "printed",
            Variant::DerivedConstant => "derived_constant",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "printed" => Ok(Variant::Printed),
            "derived" | "derived_constant" => Ok(Variant::DerivedConstant),
            other => Err(Error::Input(format!("unknown variant `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(serialize_with = "numfmt::serialize_opt")]
    pub r1: Option<f64>,
    #[serde(serialize_with = "numfmt::serialize_opt")]
    pub r2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub variant: Variant,
    pub params: BoundParams,
    #[serde(serialize_with = "numfmt::serialize")]
    pub lhs: f64,
    #[serde(serialize_with = "numfmt::serialize")]
    pub rhs: f64,
    /// The five chain values, for the chain report only.
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        serialize_with = "numfmt::serialize_opt_vec"
    )]
    pub chain: Option<Vec<f64>>,
    /// `E[k+1] − E[k]`, for the chain report only.
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        serialize_with = "numfmt::serialize_opt_vec"
    )]
    pub pairwise_slacks: Option<Vec<f64>>,
    #[serde(serialize_with = "numfmt::serialize")]
    pub slack: f64,
    #[serde(serialize_with = "numfmt::serialize")]
    pub quad_error: f64,
    pub satisfied: bool,
    pub quadrature: QuadratureConfig,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Slack below which a report counts as violated.
pub fn violation_threshold(lhs: f64, quad_error: f64) -> f64 {
    -(quad_error + REPORT_RTOL * (1.0 + lhs.abs()))
}

impl BoundReport {
    #[allow(clippy::too_many_arguments)]
    fn new(
        theorem: TheoremId,
        variant: Variant,
        params: BoundParams,
        lhs: f64,
        rhs: f64,
        quad_error: f64,
        quadrature: QuadratureConfig,
        warnings: Vec<String>,
    ) -> Self {
        let slack = rhs - lhs;
        Self {
            theorem,
            variant,
            params,
            lhs,
            rhs,
            chain: None,
            pairwise_slacks: None,
            slack,
            quad_error,
            satisfied: slack >= violation_threshold(lhs, quad_error),
            quadrature,
            warnings,
        }
    }

    /// Recomputes `satisfied` from the stored numbers.
    pub fn recompute_satisfied(&self) -> bool {
        self.rhs - self.lhs >= violation_threshold(self.lhs, self.quad_error)
    }
}

fn positive_r(r: RParam, what: &'static str) -> Result<f64> {
    if r.is_geometric() {
        Err(Error::GeometricBranchUnsupported(what))
    } else {
        Ok(r.value())
    }
}

fn same_domain(f: &PositiveFunction, g: &PositiveFunction) -> Result<()> {
    if f.domain() == g.domain() {
        Ok(())
    } else {
        Err(Error::DomainMismatch)
    }
}

fn check_conjugate(r: f64, s: f64) -> Result<()> {
    if r > 1.0 && s > 1.0 && (1.0 / r + 1.0 / s - 1.0).abs() <= CONJUGACY_TOL {
        Ok(())
    } else {
        Err(Error::NotConjugate { r, s })
    }
}

fn range_warning(name: &str, r: f64, max: f64) -> Option<String> {
    (r > max).then(|| format!("{name} = {r} is outside the hypothesis range (0, {max}]"))
}

/// `(r/(r+1))^{1/r}` or `r/(r+1)`.
fn hadamard_constant(r: f64, variant: Variant) -> f64 {
    let base = r / (r + 1.0);
    match variant {
        Variant::Printed => base.powf(1.0 / r),
        Variant::DerivedConstant => base,
    }
}

/// `(r/(r+2))^{2/r}` or `r/(r+2)`.
fn product_constant(r: f64, variant: Variant) -> f64 {
    let base = r / (r + 2.0);
    match variant {
        Variant::Printed => base.powf(2.0 / r),
        Variant::DerivedConstant => base,
    }
}

/// Average of `h` over `iv`.
fn average(
    h: impl Fn(f64) -> Result<f64>,
    iv: Interval,
    cfg: QuadratureConfig,
) -> Result<IntegralResult> {
    Ok(integrate_fn_1d(h, iv, cfg)?.scaled(1.0 / iv.width()))
}

fn average_2d(
    f: &PositiveFunction,
    rect: Rectangle,
    cfg: QuadratureConfig,
) -> Result<IntegralResult> {
    Ok(integrate_2d(f, rect, cfg)?.scaled(1.0 / rect.area()))
}

/// Error bound of a product of two estimates.
fn product_error(a: IntegralResult, b: IntegralResult) -> f64 {
    a.value.abs() * b.error_estimate
        + b.value.abs() * a.error_estimate
        + a.error_estimate * b.error_estimate
}

/// `(1/(b−a)) ∫ f ≤ C_r (f(a)^r + f(b)^r)^{1/r}`.
pub fn hadamard_r_1d(
    f: &PositiveFunction,
    r: RParam,
    cfg: QuadratureConfig,
    variant: Variant,
) -> Result<BoundReport> {
    let rv = positive_r(r, "T1_1")?;
    let iv = f.interval()?;
    let lhs = average(|x| f.eval1(x), iv, cfg)?;
    let ends = power_sum_root(r, f.eval1(iv.lo())?, f.eval1(iv.hi())?)?;
    let rhs = hadamard_constant(rv, variant) * ends;
    Ok(BoundReport::new(
        TheoremId::Hadamard1d,
        variant,
        BoundParams {
            r1: Some(rv),
            r2: None,
        },
        lhs.value,
        rhs,
        lhs.error_estimate,
        cfg,
        range_warning("r", rv, 1.0).into_iter().collect(),
    ))
}

/// `(1/(b−a)) ∫ fg ≤ ½ C_r (f(a)^r+f(b)^r)^{2/r} + ½ C_s (g(a)^s+g(b)^s)^{2/s}`.
pub fn product_rs_1d(
    f: &PositiveFunction,
    g: &PositiveFunction,
    r: RParam,
    s: RParam,
    cfg: QuadratureConfig,
    variant: Variant,
) -> Result<BoundReport> {
    let rv = positive_r(r, "T1_2")?;
    let sv = positive_r(s, "T1_2")?;
    same_domain(f, g)?;
    let iv = f.interval()?;
    let lhs = average(|x| Ok(f.eval1(x)? * g.eval1(x)?), iv, cfg)?;
    let fs = power_sum_root(r, f.eval1(iv.lo())?, f.eval1(iv.hi())?)?;
    let gs = power_sum_root(s, g.eval1(iv.lo())?, g.eval1(iv.hi())?)?;
    let rhs = 0.5 * product_constant(rv, variant) * fs * fs
        + 0.5 * product_constant(sv, variant) * gs * gs;
    let warnings = [range_warning("r", rv, 2.0), range_warning("s", sv, 2.0)]
        .into_iter()
        .flatten()
        .collect();
    Ok(BoundReport::new(
        TheoremId::Product1d,
        variant,
        BoundParams {
            r1: Some(rv),
            r2: Some(sv),
        },
        lhs.value,
        rhs,
        lhs.error_estimate,
        cfg,
        warnings,
    ))
}

/// `(1/(b−a)) ∫ fg ≤ M_r(f(a), f(b)) · M_s(g(a), g(b))` for conjugate `r, s`.
pub fn holder_rs_1d(
    f: &PositiveFunction,
    g: &PositiveFunction,
    r: RParam,
    s: RParam,
    cfg: QuadratureConfig,
) -> Result<BoundReport> {
    check_conjugate(r.value(), s.value())?;
    same_domain(f, g)?;
    let iv = f.interval()?;
    let lhs = average(|x| Ok(f.eval1(x)? * g.eval1(x)?), iv, cfg)?;
    let half = [0.5, 0.5];
    let fm = power_mean(r, &half, &[f.eval1(iv.lo())?, f.eval1(iv.hi())?]);
    let gm = power_mean(s, &half, &[g.eval1(iv.lo())?, g.eval1(iv.hi())?]);
    Ok(BoundReport::new(
        TheoremId::Holder1d,
        Variant::Printed,
        BoundParams {
            r1: Some(r.value()),
            r2: Some(s.value()),
        },
        lhs.value,
        fm * gm,
        lhs.error_estimate,
        cfg,
        Vec::new(),
    ))
}

/// Averages of a two-point boundary integrand along both edge pairs:
/// `x ↦ h(f(x,c), f(x,d))` over `[a,b]` and `y ↦ h(f(a,y), f(b,y))` over
/// `[c,d]`.
fn edge_averages(
    f: &PositiveFunction,
    rect: Rectangle,
    cfg: QuadratureConfig,
    h: impl Fn(f64, f64) -> Result<f64>,
) -> Result<(IntegralResult, IntegralResult)> {
    let (a, b, c, d) = (rect.x.lo(), rect.x.hi(), rect.y.lo(), rect.y.hi());
    let along_x = average(|x| h(f.eval2(x, c)?, f.eval2(x, d)?), rect.x, cfg)?;
    let along_y = average(|y| h(f.eval2(a, y)?, f.eval2(b, y)?), rect.y, cfg)?;
    Ok((along_x, along_y))
}

/// Coordinated r-convex bound: the double average against
/// `½ C_r [avg_x (f(x,c)^r+f(x,d)^r)^{1/r} + avg_y (f(a,y)^r+f(b,y)^r)^{1/r}]`.
pub fn coord_r(
    f: &PositiveFunction,
    r: RParam,
    cfg: QuadratureConfig,
    variant: Variant,
) -> Result<BoundReport> {
    let rv = positive_r(r, "T2_1")?;
    let rect = f.rectangle()?;
    let lhs = average_2d(f, rect, cfg)?;
    let (ex, ey) = edge_averages(f, rect, cfg, |p, q| power_sum_root(r, p, q))?;
    let k = 0.5 * hadamard_constant(rv, variant);
    let rhs = k * (ex.value + ey.value);
    let err = lhs.error_estimate + k * (ex.error_estimate + ey.error_estimate);
    Ok(BoundReport::new(
        TheoremId::Coord,
        variant,
        BoundParams {
            r1: Some(rv),
            r2: None,
        },
        lhs.value,
        rhs,
        err,
        cfg,
        range_warning("r", rv, 1.0).into_iter().collect(),
    ))
}

/// Coordinated product bound: four quarter-terms, one per function and edge
/// pair, each `¼ C_{rᵢ} avg (f(·,c)^{rᵢ} + f(·,d)^{rᵢ})^{2/rᵢ}`.
pub fn coord_product(
    f: &PositiveFunction,
    g: &PositiveFunction,
    r1: RParam,
    r2: RParam,
    cfg: QuadratureConfig,
    variant: Variant,
) -> Result<BoundReport> {
    let rv1 = positive_r(r1, "T2_4")?;
    let rv2 = positive_r(r2, "T2_4")?;
    same_domain(f, g)?;
    let rect = f.rectangle()?;
    let lhs = integrate_fn_2d_product(f, g, rect, cfg)?;
    let squared = |r: RParam| move |p: f64, q: f64| power_sum_root(r, p, q).map(|s| s * s);
    let (fx, fy) = edge_averages(f, rect, cfg, squared(r1))?;
    let (gx, gy) = edge_averages(g, rect, cfg, squared(r2))?;
    let kf = 0.25 * product_constant(rv1, variant);
    let kg = 0.25 * product_constant(rv2, variant);
    // Summed in display order: f along x, g along x, f along y, g along y.
    let rhs = kf * fx.value + kg * gx.value + kf * fy.value + kg * gy.value;
    let err = lhs.error_estimate
        + kf * (fx.error_estimate + fy.error_estimate)
        + kg * (gx.error_estimate + gy.error_estimate);
    let warnings = [range_warning("r1", rv1, 2.0), range_warning("r2", rv2, 2.0)]
        .into_iter()
        .flatten()
        .collect();
    Ok(BoundReport::new(
        TheoremId::CoordProduct,
        variant,
        BoundParams {
            r1: Some(rv1),
            r2: Some(rv2),
        },
        lhs.value,
        rhs,
        err,
        cfg,
        warnings,
    ))
}

fn integrate_fn_2d_product(
    f: &PositiveFunction,
    g: &PositiveFunction,
    rect: Rectangle,
    cfg: QuadratureConfig,
) -> Result<IntegralResult> {
    Ok(crate::quadrature::integrate_fn_2d(
        |x, y| Ok::<_, Error>(f.eval2(x, y)? * g.eval2(x, y)?),
        rect,
        cfg,
    )?
    .scaled(1.0 / rect.area()))
}

/// `(avg P)^{1/r}` with its propagated error.
fn root_of_average(avg: IntegralResult, r: f64) -> IntegralResult {
    let value = avg.value.powf(1.0 / r);
    IntegralResult {
        value,
        error_estimate: value / (r * avg.value) * avg.error_estimate,
    }
}

/// Coordinated Hölder bound for conjugate `r₁, r₂`.
///
/// `printed`: `½·avg_x M_{r₁}(f(x,c), f(x,d))·avg_x M_{r₂}(g(x,c), g(x,d))`
/// plus the same along `y`.
///
/// `derived_constant`: each averaged power mean is replaced by
/// `(avg_x M_{r₁}(f(x,c), f(x,d))^{r₁})^{1/r₁}`, which is what Hölder's
/// inequality in the outer variable gives. At `r₁ = r₂ = 2` this is the
/// square-root corollary, and with `g = f` the sum of squared edge averages.
pub fn coord_holder(
    f: &PositiveFunction,
    g: &PositiveFunction,
    r1: RParam,
    r2: RParam,
    cfg: QuadratureConfig,
    variant: Variant,
) -> Result<BoundReport> {
    let (rv1, rv2) = (r1.value(), r2.value());
    check_conjugate(rv1, rv2)?;
    same_domain(f, g)?;
    let rect = f.rectangle()?;
    let lhs = integrate_fn_2d_product(f, g, rect, cfg)?;
    let half = [0.5, 0.5];

    let factors = |h: &PositiveFunction, r: RParam| -> Result<(IntegralResult, IntegralResult)> {
        match variant {
            Variant::Printed => {
                edge_averages(h, rect, cfg, |p, q| Ok(power_mean(r, &half, &[p, q])))
            }
            Variant::DerivedConstant => {
                let (ax, ay) = edge_averages(h, rect, cfg, |p, q| {
                    Ok(power_mean(r, &half, &[p, q]).powf(r.value()))
                })?;
                Ok((
                    root_of_average(ax, r.value()),
                    root_of_average(ay, r.value()),
                ))
            }
        }
    };
    let (fx, fy) = factors(f, r1)?;
    let (gx, gy) = factors(g, r2)?;
    let rhs = 0.5 * fx.value * gx.value + 0.5 * fy.value * gy.value;
    let err = lhs.error_estimate + 0.5 * (product_error(fx, gx) + product_error(fy, gy));
    Ok(BoundReport::new(
        TheoremId::CoordHolder,
        variant,
        BoundParams {
            r1: Some(rv1),
            r2: Some(rv2),
        },
        lhs.value,
        rhs,
        err,
        cfg,
        Vec::new(),
    ))
}

/// The five-term chain for coordinated convex `f`, in order: center value,
/// half-sum of mid-line averages, double average, quarter-sum of edge
/// averages, corner average.
///
/// The report's `lhs`/`rhs` are the adjacent pair with the smallest margin,
/// so `slack = rhs − lhs` and `satisfied` holds iff every link holds.
pub fn dragomir_chain(f: &PositiveFunction, cfg: QuadratureConfig) -> Result<BoundReport> {
    let rect = f.rectangle()?;
    let (a, b, c, d) = (rect.x.lo(), rect.x.hi(), rect.y.lo(), rect.y.hi());
    let (xm, ym) = (rect.x.midpoint(), rect.y.midpoint());

    let e1 = f.eval2(xm, ym)?;
    let mid_x = average(|x| f.eval2(x, ym), rect.x, cfg)?;
    let mid_y = average(|y| f.eval2(xm, y), rect.y, cfg)?;
    let e2 = 0.5 * (mid_x.value + mid_y.value);
    let e2_err = 0.5 * (mid_x.error_estimate + mid_y.error_estimate);
    let e3 = average_2d(f, rect, cfg)?;
    let edges = [
        average(|x| f.eval2(x, c), rect.x, cfg)?,
        average(|x| f.eval2(x, d), rect.x, cfg)?,
        average(|y| f.eval2(a, y), rect.y, cfg)?,
        average(|y| f.eval2(b, y), rect.y, cfg)?,
    ];
    let e4 = 0.25 * edges.iter().map(|e| e.value).sum::<f64>();
    let e4_err = 0.25 * edges.iter().map(|e| e.error_estimate).sum::<f64>();
    let e5 = 0.25 * (f.eval2(a, c)? + f.eval2(a, d)? + f.eval2(b, c)? + f.eval2(b, d)?);

    let chain = vec![e1, e2, e3.value, e4, e5];
    let errors = [0.0, e2_err, e3.error_estimate, e4_err, 0.0];
    let slacks: Vec<f64> = chain.windows(2).map(|w| w[1] - w[0]).collect();
    let tightest = (0..4)
        .min_by(|&i, &j| {
            let margin =
                |k: usize| slacks[k] - violation_threshold(chain[k], errors[k] + errors[k + 1]);
            margin(i).total_cmp(&margin(j))
        })
        .expect("four links");

    let mut report = BoundReport::new(
        TheoremId::Chain,
        Variant::Printed,
        BoundParams::default(),
        chain[tightest],
        chain[tightest + 1],
        errors[tightest] + errors[tightest + 1],
        cfg,
        Vec::new(),
    );
    report.chain = Some(chain);
    report.pairwise_slacks = Some(slacks);
    Ok(report)
}

/// Dispatches to the evaluator for `theorem`. `g` is required for the
/// two-function bounds and ignored otherwise; `r2` defaults to `r1` for the
/// product bounds and to the conjugate of `r1` for the Hölder bounds.
pub fn evaluate(
    theorem: TheoremId,
    f: &PositiveFunction,
    g: Option<&PositiveFunction>,
    r1: Option<f64>,
    r2: Option<f64>,
    cfg: QuadratureConfig,
    variant: Variant,
) -> Result<BoundReport> {
    if f.arity() != theorem.arity() {
        return Err(Error::WrongArity {
            expected: theorem.arity(),
            found: f.arity(),
        });
    }
    if theorem == TheoremId::Chain {
        return dragomir_chain(f, cfg);
    }
    let r1v = r1.ok_or_else(|| Error::Input(format!("{theorem} needs --r")))?;
    let r = RParam::new(r1v)?;
    let second = || -> Result<RParam> {
        let default = if theorem.is_holder() {
            r1v / (r1v - 1.0)
        } else {
            r1v
        };
        RParam::new(r2.unwrap_or(default))
    };
    let pair = || g.ok_or_else(|| Error::Input(format!("{theorem} needs a second function --g")));
    match theorem {
        TheoremId::Hadamard1d => hadamard_r_1d(f, r, cfg, variant),
        TheoremId::Product1d => product_rs_1d(f, pair()?, r, second()?, cfg, variant),
        TheoremId::Holder1d => holder_rs_1d(f, pair()?, r, second()?, cfg),
        TheoremId::Coord => coord_r(f, r, cfg, variant),
        TheoremId::CoordProduct => coord_product(f, pair()?, r, second()?, cfg, variant),
        TheoremId::CoordHolder => coord_holder(f, pair()?, r, second()?, cfg, variant),
        TheoremId::Chain => unreachable!(),
    }
}
