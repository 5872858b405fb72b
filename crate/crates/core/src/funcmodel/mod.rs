//! Domains, expressions, and strictly positive functions of one or two
//! variables.

mod expr;
mod parse;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use expr::Expr;
pub use parse::{parse_expr, ParseError, ParseErrorKind};

use crate::error::{Error, Result};

/// Smallest value a [`PositiveFunction`] may take at a sampled point.
pub const POSITIVITY_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo, hi })
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Membership with a few ulps of slack, so convex blends of endpoints
    /// computed in floating point are accepted.
    pub fn contains(&self, v: f64) -> bool {
        let slack = 4.0 * f64::EPSILON * self.lo.abs().max(self.hi.abs()).max(1.0);
        v >= self.lo - slack && v <= self.hi + slack
    }

    /// `n` equally spaced points including both endpoints.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        debug_assert!(n >= 2);
        let step = self.width() / (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    self.hi
                } else {
                    self.lo + step * i as f64
                }
            })
            .collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// `[a, b] × [c, d]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    pub x: Interval,
    pub y: Interval,
}

impl Rectangle {
    pub fn new(x: Interval, y: Interval) -> Self {
        Self { x, y }
    }

    pub fn from_bounds(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Ok(Self::new(Interval::new(a, b)?, Interval::new(c, d)?))
    }

    pub fn unit() -> Self {
        Self::from_bounds(0.0, 1.0, 0.0, 1.0).expect("unit square")
    }

    pub fn area(&self) -> f64 {
        self.x.width() * self.y.width()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Domain {
    Line(Interval),
    Rect(Rectangle),
}

impl Domain {
    pub fn arity(&self) -> usize {
        match self {
            Domain::Line(_) => 1,
            Domain::Rect(_) => 2,
        }
    }
}

impl From<Interval> for Domain {
    fn from(iv: Interval) -> Self {
        Domain::Line(iv)
    }
}

impl From<Rectangle> for Domain {
    fn from(rect: Rectangle) -> Self {
        Domain::Rect(rect)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

type Closure = dyn Fn(f64, f64) -> f64 + Send + Sync;

#[derive(Clone)]
enum Body {
    Expr(Arc<Expr>),
    Closure { f: Arc<Closure>, label: Arc<str> },
}

/// A function into `(0, ∞)` on an interval or rectangle.
///
/// Positivity is checked at every evaluation against a small floor instead
/// of being proved, so an input that dips below zero anywhere the library
/// samples it is reported rather than clamped.
#[derive(Clone)]
pub struct PositiveFunction {
    body: Body,
    domain: Domain,
    floor: f64,
}

impl fmt::Debug for PositiveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PositiveFunction")
            .field("body", &self.to_string())
            .field("domain", &self.domain)
            .finish()
    }
}

impl fmt::Display for PositiveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            Body::Expr(e) => write!(f, "{e}"),
            Body::Closure { label, .. } => f.write_str(label),
        }
    }
}

impl PositiveFunction {
    pub fn from_expr(expr: Expr, domain: impl Into<Domain>) -> Result<Self> {
        let domain = domain.into();
        if domain.arity() == 1 && expr.uses_y() {
            return Err(Error::ArityMismatch);
        }
        Ok(Self {
            body: Body::Expr(Arc::new(expr)),
            domain,
            floor: POSITIVITY_FLOOR,
        })
    }

    /// Parses `text` and attaches `domain`.
    pub fn parse(text: &str, domain: impl Into<Domain>) -> Result<Self> {
        Self::from_expr(parse_expr(text)?, domain)
    }

    /// Wraps a generated closure. One-variable closures ignore their second
    /// argument.
    pub fn from_closure<F>(label: impl Into<String>, domain: impl Into<Domain>, f: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            body: Body::Closure {
                f: Arc::new(f),
                label: label.into().into(),
            },
            domain: domain.into(),
            floor: POSITIVITY_FLOOR,
        }
    }

    pub fn constant(value: f64, domain: impl Into<Domain>) -> Result<Self> {
        Self::from_expr(Expr::Const(value), domain)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn arity(&self) -> usize {
        self.domain.arity()
    }

    pub fn floor(&self) -> f64 {
        self.floor
    }

    pub fn expr(&self) -> Option<&Expr> {
        match &self.body {
            Body::Expr(e) => Some(e),
            Body::Closure { .. } => None,
        }
    }

    pub fn interval(&self) -> Result<Interval> {
        match self.domain {
            Domain::Line(iv) => Ok(iv),
            Domain::Rect(_) => Err(Error::WrongArity {
                expected: 1,
                found: 2,
            }),
        }
    }

    pub fn rectangle(&self) -> Result<Rectangle> {
        match self.domain {
            Domain::Rect(r) => Ok(r),
            Domain::Line(_) => Err(Error::WrongArity {
                expected: 2,
                found: 1,
            }),
        }
    }

    fn raw(&self, x: f64, y: f64) -> f64 {
        match &self.body {
            Body::Expr(e) => e.eval(x, y),
            Body::Closure { f, .. } => f(x, y),
        }
    }

    fn checked(&self, x: f64, y: f64, point: impl Fn() -> Vec<f64>) -> Result<f64> {
        let v = self.raw(x, y);
        if v.is_nan() || v.is_infinite() {
            Err(Error::NonFinite { point: point() })
        } else if v < self.floor {
            Err(Error::NonPositive {
                point: point(),
                value: v,
                floor: self.floor,
            })
        } else {
            Ok(v)
        }
    }

    /// Evaluates a one-variable function.
    pub fn eval1(&self, x: f64) -> Result<f64> {
        let iv = self.interval()?;
        if !iv.contains(x) {
            return Err(Error::OutsideDomain { point: vec![x] });
        }
        self.checked(x, 0.0, || vec![x])
    }

    /// Evaluates a two-variable function.
    pub fn eval2(&self, x: f64, y: f64) -> Result<f64> {
        let rect = self.rectangle()?;
        if !rect.x.contains(x) || !rect.y.contains(y) {
            return Err(Error::OutsideDomain { point: vec![x, y] });
        }
        self.checked(x, y, || vec![x, y])
    }

    /// Evaluates at a point given as a slice of length equal to the arity.
    pub fn eval(&self, p: &[f64]) -> Result<f64> {
        match (self.arity(), p) {
            (1, [x]) => self.eval1(*x),
            (2, [x, y]) => self.eval2(*x, *y),
            (expected, _) => Err(Error::WrongArity {
                expected,
                found: p.len(),
            }),
        }
    }

    /// The one-variable map obtained by freezing the coordinate orthogonal
    /// to `axis`: `Axis::X` keeps `x` free with `y = fixed`, `Axis::Y` keeps
    /// `y` free with `x = fixed`. The result is always expressed in `x`.
    pub fn partial_map(&self, axis: Axis, fixed: f64) -> Result<PositiveFunction> {
        let rect = self.rectangle()?;
        let (free, frozen) = match axis {
            Axis::X => (rect.x, rect.y),
            Axis::Y => (rect.y, rect.x),
        };
        if !frozen.contains(fixed) {
            return Err(Error::OutsideDomain { point: vec![fixed] });
        }
        let body = match &self.body {
            Body::Expr(e) => {
                let substituted = match axis {
                    Axis::X => e.map_vars(&|leaf| match leaf {
                        Expr::Y => Expr::Const(fixed),
                        other => other.clone(),
                    }),
                    Axis::Y => e.map_vars(&|leaf| match leaf {
                        Expr::X => Expr::Const(fixed),
                        _ => Expr::X,
                    }),
                };
                Body::Expr(Arc::new(substituted))
            }
            Body::Closure { f, label } => {
                let f = Arc::clone(f);
                let (wrapped, label): (Arc<Closure>, String) = match axis {
                    Axis::X => (
                        Arc::new(move |x, _| f(x, fixed)),
                        format!("{label} at y = {fixed}"),
                    ),
                    Axis::Y => (
                        Arc::new(move |y, _| f(fixed, y)),
                        format!("{label} at x = {fixed}"),
                    ),
                };
                Body::Closure {
                    f: wrapped,
                    label: label.into(),
                }
            }
        };
        Ok(PositiveFunction {
            body,
            domain: Domain::Line(free),
            floor: self.floor,
        })
    }

    /// `self^p` on the same domain.
    pub fn powf(&self, p: f64) -> PositiveFunction {
        self.map_body(|e| e.powf(p), move |v| v.powf(p), &format!("^{p}"))
    }

    /// `exp(self)` on the same domain.
    pub fn exp(&self) -> PositiveFunction {
        self.map_body(Expr::exp, f64::exp, "exp")
    }

    fn map_body(
        &self,
        on_expr: impl FnOnce(Expr) -> Expr,
        on_value: impl Fn(f64) -> f64 + Send + Sync + 'static,
        tag: &str,
    ) -> PositiveFunction {
        let body = match &self.body {
            Body::Expr(e) => Body::Expr(Arc::new(on_expr((**e).clone()))),
            Body::Closure { f, label } => {
                let f = Arc::clone(f);
                Body::Closure {
                    f: Arc::new(move |x, y| on_value(f(x, y))),
                    label: format!("({label}){tag}").into(),
                }
            }
        };
        PositiveFunction {
            body,
            domain: self.domain,
            floor: self.floor,
        }
    }
}
