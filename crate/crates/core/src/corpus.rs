//! Seeded families of convex positive base functions.
//!
//! Bases are ordinary convex (or coordinate-wise convex) functions; the
//! generators in [`crate::convexity`] turn them into exact members of an
//! r-convex class. Constants are always part of a corpus because they sit on
//! the equality case of every definition.

use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::funcmodel::{Expr, Interval, PositiveFunction, Rectangle};

/// Seeded generator used for every corpus.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `c·v` with a non-negative literal, negated when `c < 0`.
fn scaled(c: f64, v: Expr) -> Expr {
    if c < 0.0 {
        Expr::Const(-c).mul(v).neg()
    } else {
        Expr::Const(c).mul(v)
    }
}

/// `v − m` written without negative literals.
fn shifted(v: Expr, m: f64) -> Expr {
    if m < 0.0 {
        v.add(Expr::Const(-m))
    } else {
        v.sub(Expr::Const(m))
    }
}

fn plus_signed(e: Expr, c: f64) -> Expr {
    if c < 0.0 {
        e.sub(Expr::Const(-c))
    } else {
        e.add(Expr::Const(c))
    }
}

/// Convex positive bases on an interval.
#[derive(Debug, Clone, PartialEq)]
pub enum Base1d {
    Constant(f64),
    /// `a(x − m)² + c`
    Quadratic {
        a: f64,
        m: f64,
        c: f64,
    },
    /// `exp(αx + γ)`
    Exponential {
        alpha: f64,
        gamma: f64,
    },
}

impl Base1d {
    pub fn expr(&self) -> Expr {
        match *self {
            Base1d::Constant(k) => Expr::Const(k),
            Base1d::Quadratic { a, m, c } => Expr::Const(a)
                .mul(shifted(Expr::X, m).powf(2.0))
                .add(Expr::Const(c)),
            Base1d::Exponential { alpha, gamma } => {
                plus_signed(scaled(alpha, Expr::X), gamma).exp()
            }
        }
    }

    pub fn function(&self, iv: Interval) -> PositiveFunction {
        PositiveFunction::from_expr(self.expr(), iv).expect("one-variable base")
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Base1d::Constant(_))
    }

    /// Instance `index` of a seeded stream: index 0 is the constant 1, every
    /// tenth instance is a random constant, the rest alternate quadratics and
    /// exponentials.
    pub fn sample(rng: &mut impl Rng, iv: Interval, index: usize) -> Self {
        if index == 0 {
            return Base1d::Constant(1.0);
        }
        if index.is_multiple_of(10) {
            return Base1d::Constant(rng.gen_range(0.2..5.0));
        }
        let w = iv.width();
        let scale = 1.0 / w;
        if index % 2 == 1 {
            Base1d::Quadratic {
                a: rng.gen_range(0.05..3.0) * scale * scale,
                m: rng.gen_range(iv.lo() - 0.5 * w..iv.hi() + 0.5 * w),
                c: rng.gen_range(0.05..2.0),
            }
        } else {
            Base1d::Exponential {
                alpha: rng.gen_range(-2.0..2.0) * scale,
                gamma: rng.gen_range(-1.0..1.0),
            }
        }
    }

    pub fn corpus(seed: u64, iv: Interval, n: usize) -> Vec<Self> {
        let mut rng = rng(seed);
        (0..n).map(|i| Self::sample(&mut rng, iv, i)).collect()
    }
}

/// Bases whose partial maps are convex on a rectangle.
#[derive(Debug, Clone, PartialEq)]
pub enum Base2d {
    Constant(f64),
    /// `a(x − m)² + b(y − n)² + c`
    Quadratic {
        a: f64,
        m: f64,
        b: f64,
        n: f64,
        c: f64,
    },
    /// `exp(αx + βy + γ)`
    ExpAffine {
        alpha: f64,
        beta: f64,
        gamma: f64,
    },
    /// `p + q(x − x₀) + s(y − y₀) + k(x − x₀)(y − y₀)` with non-negative
    /// coefficients, `(x₀, y₀)` the lower-left corner.
    Bilinear {
        p: f64,
        q: f64,
        s: f64,
        k: f64,
        x0: f64,
        y0: f64,
    },
    /// `a(x − m)²(y − n)² + c`, convex along each axis but not jointly.
    QuadraticProduct {
        a: f64,
        m: f64,
        n: f64,
        c: f64,
    },
}

impl Base2d {
    pub fn expr(&self) -> Expr {
        match *self {
            Base2d::Constant(k) => Expr::Const(k),
            Base2d::Quadratic { a, m, b, n, c } => Expr::Const(a)
                .mul(shifted(Expr::X, m).powf(2.0))
                .add(Expr::Const(b).mul(shifted(Expr::Y, n).powf(2.0)))
                .add(Expr::Const(c)),
            Base2d::ExpAffine { alpha, beta, gamma } => {
                plus_signed(scaled(alpha, Expr::X).add(scaled(beta, Expr::Y)), gamma).exp()
            }
            Base2d::Bilinear { p, q, s, k, x0, y0 } => {
                let dx = shifted(Expr::X, x0);
                let dy = shifted(Expr::Y, y0);
                Expr::Const(p)
                    .add(Expr::Const(q).mul(dx.clone()))
                    .add(Expr::Const(s).mul(dy.clone()))
                    .add(Expr::Const(k).mul(dx).mul(dy))
            }
            Base2d::QuadraticProduct { a, m, n, c } => Expr::Const(a)
                .mul(shifted(Expr::X, m).powf(2.0))
                .mul(shifted(Expr::Y, n).powf(2.0))
                .add(Expr::Const(c)),
        }
    }

    pub fn function(&self, rect: Rectangle) -> PositiveFunction {
        PositiveFunction::from_expr(self.expr(), rect).expect("two-variable base")
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Base2d::Constant(_))
    }

    /// Instance `index` of a seeded stream; index 0 is the constant 1 and
    /// every tenth instance is a random constant.
    pub fn sample(rng: &mut impl Rng, rect: Rectangle, index: usize) -> Self {
        if index == 0 {
            return Base2d::Constant(1.0);
        }
        if index.is_multiple_of(10) {
            return Base2d::Constant(rng.gen_range(0.2..5.0));
        }
        let (wx, wy) = (rect.x.width(), rect.y.width());
        let around = |rng: &mut dyn rand::RngCore, iv: Interval| {
            let w = iv.width();
            rng.gen_range(iv.lo() - 0.5 * w..iv.hi() + 0.5 * w)
        };
        match index % 4 {
            1 => Base2d::Quadratic {
                a: rng.gen_range(0.05..3.0) / (wx * wx),
                m: around(rng, rect.x),
                b: rng.gen_range(0.05..3.0) / (wy * wy),
                n: around(rng, rect.y),
                c: rng.gen_range(0.05..2.0),
            },
            2 => Base2d::ExpAffine {
                alpha: rng.gen_range(-2.0..2.0) / wx,
                beta: rng.gen_range(-2.0..2.0) / wy,
                gamma: rng.gen_range(-1.0..1.0),
            },
            3 => Base2d::Bilinear {
                p: rng.gen_range(0.1..2.0),
                q: rng.gen_range(0.0..2.0) / wx,
                s: rng.gen_range(0.0..2.0) / wy,
                k: rng.gen_range(0.0..2.0) / (wx * wy),
                x0: rect.x.lo(),
                y0: rect.y.lo(),
            },
            _ => Base2d::QuadraticProduct {
                a: rng.gen_range(0.05..3.0) / (wx * wx * wy * wy),
                m: around(rng, rect.x),
                n: around(rng, rect.y),
                c: rng.gen_range(0.05..2.0),
            },
        }
    }

    /// Bases that satisfy the four-corner inequality with equality once
    /// transformed: exp-of-affine (log-affine) and bilinear (multi-affine)
    /// forms, with the constant 1 first.
    pub fn sample_multiaffine(rng: &mut impl Rng, rect: Rectangle, index: usize) -> Self {
        if index == 0 {
            return Base2d::Constant(1.0);
        }
        let (wx, wy) = (rect.x.width(), rect.y.width());
        if index % 2 == 1 {
            Base2d::ExpAffine {
                alpha: rng.gen_range(-2.0..2.0) / wx,
                beta: rng.gen_range(-2.0..2.0) / wy,
                gamma: rng.gen_range(-1.0..1.0),
            }
        } else {
            Base2d::Bilinear {
                p: rng.gen_range(0.1..2.0),
                q: rng.gen_range(0.0..2.0) / wx,
                s: rng.gen_range(0.0..2.0) / wy,
                k: rng.gen_range(0.0..2.0) / (wx * wy),
                x0: rect.x.lo(),
                y0: rect.y.lo(),
            }
        }
    }

    pub fn corpus(seed: u64, rect: Rectangle, n: usize) -> Vec<Self> {
        let mut rng = rng(seed);
        (0..n).map(|i| Self::sample(&mut rng, rect, i)).collect()
    }
}
