//! Composite Gauss–Legendre quadrature on intervals and rectangles.
//!
//! Each rule's nodes and weights are computed by Newton iteration on the
//! Legendre polynomial the first time the order is requested and then
//! shared. The error estimate compares the result against the same rule on
//! half as many panels.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::funcmodel::{Interval, PositiveFunction, Rectangle};

pub const MIN_NODES: usize = 2;
pub const MAX_NODES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub nodes_per_panel: usize,
    pub panels_per_axis: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            nodes_per_panel: 8,
            panels_per_axis: 4,
        }
    }
}

impl QuadratureConfig {
    pub fn new(nodes_per_panel: usize, panels_per_axis: usize) -> Result<Self> {
        let cfg = Self {
            nodes_per_panel,
            panels_per_axis,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(MIN_NODES..=MAX_NODES).contains(&self.nodes_per_panel) {
            return Err(Error::InvalidQuadrature(format!(
                "nodes_per_panel must be in [{MIN_NODES}, {MAX_NODES}], got {}",
                self.nodes_per_panel
            )));
        }
        if self.panels_per_axis == 0 {
            return Err(Error::InvalidQuadrature(
                "panels_per_axis must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Panel count used for the error estimate.
    fn reference_panels(&self) -> usize {
        if self.panels_per_axis == 1 {
            2
        } else {
            self.panels_per_axis / 2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
}

impl IntegralResult {
    /// Multiplies value and error by a constant.
    pub fn scaled(self, k: f64) -> Self {
        Self {
            value: self.value * k,
            error_estimate: self.error_estimate * k.abs(),
        }
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    fn compute(n: usize) -> Self {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Chebyshev-like starting guess for the i-th largest root.
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, z);
                dp = d;
                let dz = p / d;
                z -= dz;
                if dz.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, z);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - z * z) * dp * dp);
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    /// Cached rule of order `n` (2 ≤ n ≤ 64).
    pub fn get(n: usize) -> &'static GaussRule {
        static RULES: [OnceLock<GaussRule>; MAX_NODES + 1] =
            [const { OnceLock::new() }; MAX_NODES + 1];
        assert!(
            (MIN_NODES..=MAX_NODES).contains(&n),
            "unsupported order {n}"
        );
        RULES[n].get_or_init(|| GaussRule::compute(n))
    }
}

/// `(P_n(z), P_n'(z))` by the three-term recurrence.
fn legendre(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, dp)
}

/// Points and weights of the composite rule on `iv` with `panels` panels.
fn composite_nodes(iv: Interval, rule: &GaussRule, panels: usize) -> Vec<(f64, f64)> {
    let h = iv.width() / panels as f64;
    let mut out = Vec::with_capacity(panels * rule.nodes.len());
    for p in 0..panels {
        let lo = iv.lo() + h * p as f64;
        let hi = if p + 1 == panels { iv.hi() } else { lo + h };
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        for (z, w) in rule.nodes.iter().zip(&rule.weights) {
            out.push((mid + half * z, half * w));
        }
    }
    out
}

fn sum_1d<E>(
    f: &impl Fn(f64) -> Result<f64, E>,
    iv: Interval,
    rule: &GaussRule,
    panels: usize,
) -> Result<f64, E> {
    let mut total = 0.0;
    for (x, w) in composite_nodes(iv, rule, panels) {
        total += w * f(x)?;
    }
    Ok(total)
}

/// Integrates an arbitrary fallible integrand over `iv`.
pub fn integrate_fn_1d<E>(
    f: impl Fn(f64) -> Result<f64, E>,
    iv: Interval,
    cfg: QuadratureConfig,
) -> Result<IntegralResult, E>
where
    E: From<Error>,
{
    cfg.validate()?;
    let rule = GaussRule::get(cfg.nodes_per_panel);
    let value = sum_1d(&f, iv, rule, cfg.panels_per_axis)?;
    let reference = sum_1d(&f, iv, rule, cfg.reference_panels())?;
    Ok(IntegralResult {
        value,
        error_estimate: (value - reference).abs(),
    })
}

fn sum_2d<E>(
    f: &impl Fn(f64, f64) -> Result<f64, E>,
    rect: Rectangle,
    rule: &GaussRule,
    panels: usize,
) -> Result<f64, E> {
    let xs = composite_nodes(rect.x, rule, panels);
    let ys = composite_nodes(rect.y, rule, panels);
    let mut total = 0.0;
    for &(x, wx) in &xs {
        let mut row = 0.0;
        for &(y, wy) in &ys {
            row += wy * f(x, y)?;
        }
        total += wx * row;
    }
    Ok(total)
}

/// Integrates an arbitrary fallible integrand over `rect` with the tensor
/// product of the composite rule.
pub fn integrate_fn_2d<E>(
    f: impl Fn(f64, f64) -> Result<f64, E>,
    rect: Rectangle,
    cfg: QuadratureConfig,
) -> Result<IntegralResult, E>
where
    E: From<Error>,
{
    cfg.validate()?;
    let rule = GaussRule::get(cfg.nodes_per_panel);
    let value = sum_2d(&f, rect, rule, cfg.panels_per_axis)?;
    let reference = sum_2d(&f, rect, rule, cfg.reference_panels())?;
    Ok(IntegralResult {
        value,
        error_estimate: (value - reference).abs(),
    })
}

/// `∫_iv f`.
pub fn integrate_1d(
    f: &PositiveFunction,
    iv: Interval,
    cfg: QuadratureConfig,
) -> Result<IntegralResult> {
    f.interval()?;
    integrate_fn_1d(|x| f.eval1(x), iv, cfg)
}

/// `∬_rect f`.
pub fn integrate_2d(
    f: &PositiveFunction,
    rect: Rectangle,
    cfg: QuadratureConfig,
) -> Result<IntegralResult> {
    f.rectangle()?;
    integrate_fn_2d(|x, y| f.eval2(x, y), rect, cfg)
}
