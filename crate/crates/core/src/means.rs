//! Weighted power means and the one- and two-variable r-combinations built
//! from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Below this order the power mean is evaluated as the geometric mean.
pub const GEOMETRIC_THRESHOLD: f64 = 1e-12;

const WEIGHT_SUM_TOL: f64 = 1e-12;

/// Convexity order `r ≥ 0`; `r = 0` is the log-convex (geometric) branch.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct RParam(f64);

impl RParam {
    pub const GEOMETRIC: RParam = RParam(0.0);
    pub const ONE: RParam = RParam(1.0);

    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() && r >= 0.0 {
            Ok(Self(r))
        } else {
            Err(Error::InvalidR(r))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_geometric(self) -> bool {
        self.0 < GEOMETRIC_THRESHOLD
    }
}

impl TryFrom<f64> for RParam {
    type Error = Error;

    fn try_from(r: f64) -> Result<Self> {
        Self::new(r)
    }
}

impl From<RParam> for f64 {
    fn from(r: RParam) -> f64 {
        r.0
    }
}

impl fmt::Display for RParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Paired weights and positive values.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    values: Vec<f64>,
}

impl WeightVector {
    /// Weights must lie in `[0, 1]` and sum to one within `1e-12`; they are
    /// never renormalized.
    pub fn new(weights: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if weights.is_empty() || weights.len() != values.len() {
            return Err(Error::InvalidWeights(format!(
                "{} weights for {} values",
                weights.len(),
                values.len()
            )));
        }
        if let Some(&w) = weights.iter().find(|w| !(0.0..=1.0).contains(*w)) {
            return Err(Error::WeightOutOfRange(w));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}")));
        }
        if let Some(&v) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::InvalidWeights(format!("value {v} is not positive")));
        }
        Ok(Self { weights, values })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// `(Σ wᵢ vᵢ^r)^{1/r}` for `r > 0`, `Π vᵢ^{wᵢ}` for `r = 0`.
pub fn weighted_power_mean(r: RParam, wv: &WeightVector) -> f64 {
    power_mean(r, &wv.weights, &wv.values)
}

/// Unchecked kernel shared by the validated entry points.
///
/// Values are scaled by their maximum before exponentiation so neither tiny
/// `r` nor extreme magnitudes overflow.
pub(crate) fn power_mean(r: RParam, weights: &[f64], values: &[f64]) -> f64 {
    debug_assert_eq!(weights.len(), values.len());
    let m = values.iter().copied().fold(f64::MIN_POSITIVE, f64::max);
    let log_m = m.ln();
    if r.is_geometric() {
        let s: f64 = weights
            .iter()
            .zip(values)
            .filter(|(w, _)| **w > 0.0)
            .map(|(w, v)| w * (v.ln() - log_m))
            .sum();
        return m * s.exp();
    }
    let r = r.0;
    if r == 1.0 {
        let s: f64 = weights.iter().zip(values).map(|(w, v)| w * (v / m)).sum();
        return m * s;
    }
    let s: f64 = weights
        .iter()
        .zip(values)
        .filter(|(w, _)| **w > 0.0)
        .map(|(w, v)| w * (r * (v.ln() - log_m)).exp())
        .sum();
    m * (s.ln() / r).exp()
}

fn check_unit(w: f64) -> Result<()> {
    if (0.0..=1.0).contains(&w) {
        Ok(())
    } else {
        Err(Error::WeightOutOfRange(w))
    }
}

fn check_positive(values: &[f64]) -> Result<()> {
    match values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        Some(v) => Err(Error::InvalidWeights(format!("value {v} is not positive"))),
        None => Ok(()),
    }
}

/// Right-hand side of the one-variable r-convexity inequality:
/// `M_r((t, 1−t); (fa, fb))`.
pub fn r_combination_1d(r: RParam, t: f64, fa: f64, fb: f64) -> Result<f64> {
    check_unit(t)?;
    check_positive(&[fa, fb])?;
    Ok(power_mean(r, &[t, 1.0 - t], &[fa, fb]))
}

/// Right-hand side of the two-variable inequality: the power mean of the four
/// corner values with tensor weights `tλ, t(1−λ), (1−t)λ, (1−t)(1−λ)`.
pub fn r_combination_2d(
    r: RParam,
    t: f64,
    lambda: f64,
    v_xu: f64,
    v_xv: f64,
    v_yu: f64,
    v_yv: f64,
) -> Result<f64> {
    check_unit(t)?;
    check_unit(lambda)?;
    let values = [v_xu, v_xv, v_yu, v_yv];
    check_positive(&values)?;
    let weights = [
        t * lambda,
        t * (1.0 - lambda),
        (1.0 - t) * lambda,
        (1.0 - t) * (1.0 - lambda),
    ];
    Ok(power_mean(r, &weights, &values))
}

/// `(a^r + b^r)^{1/r}`, the unnormalized two-point power sum appearing in the
/// Hadamard-type bounds. Computed as `2^{1/r}·M_r(½, ½; a, b)`.
pub fn power_sum_root(r: RParam, a: f64, b: f64) -> Result<f64> {
    if r.is_geometric() {
        return Err(Error::GeometricBranchUnsupported("power sum"));
    }
    check_positive(&[a, b])?;
    Ok(2f64.powf(1.0 / r.0) * power_mean(r, &[0.5, 0.5], &[a, b]))
}
