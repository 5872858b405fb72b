//! Grid-based decision procedures for r-convexity.
//!
//! A passing verdict means no violation was found at the sampled resolution;
//! the grid used is recorded in the verdict. Failing verdicts carry the first
//! violating configuration in grid order, independent of scheduling.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::Base2d;
use crate::error::{Error, Result};
use crate::funcmodel::{Axis, PositiveFunction, Rectangle};
use crate::means::{power_mean, r_combination_1d, r_combination_2d, RParam};

/// Relative part of the checker tolerance `1e-9·(1 + max |f|)`.
pub const CHECK_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub points_per_axis: usize,
    /// Blend weights used for `t` and `λ`.
    pub weights: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            points_per_axis: 17,
            weights: vec![0.1, 0.25, 0.5, 0.75, 0.9],
        }
    }
}

impl GridSpec {
    pub fn new(points_per_axis: usize, weights: Vec<f64>) -> Result<Self> {
        let grid = Self {
            points_per_axis,
            weights,
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn with_points(points_per_axis: usize) -> Result<Self> {
        Self::new(points_per_axis, Self::default().weights)
    }

    pub fn validate(&self) -> Result<()> {
        if self.points_per_axis < 3 {
            return Err(Error::InvalidGrid(format!(
                "need at least 3 points per axis, got {}",
                self.points_per_axis
            )));
        }
        if let Some(w) = self.weights.iter().find(|w| !(**w > 0.0 && **w < 1.0)) {
            return Err(Error::InvalidGrid(format!("weight {w} is not in (0, 1)")));
        }
        if !self.weights.contains(&0.5) {
            return Err(Error::InvalidGrid("weights must include 0.5".into()));
        }
        Ok(())
    }

    /// `W ∪ (1 − W)`, sorted and deduplicated. Pairing unordered grid pairs
    /// with these weights covers every ordered pair with the original ones.
    fn symmetric_weights(&self) -> Vec<f64> {
        let mut ws: Vec<f64> = self.weights.iter().flat_map(|&w| [w, 1.0 - w]).collect();
        ws.sort_by(f64::total_cmp);
        ws.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        ws
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedCoordinate {
    /// Axis along which the failing partial map varies.
    pub axis: Axis,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `f(t·x + (1−t)·y) > M_r(t; f(x), f(y))`.
    Line {
        x: f64,
        y: f64,
        t: f64,
        lhs: f64,
        rhs: f64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        fixed: Option<FixedCoordinate>,
    },
    /// The four-corner inequality on a rectangle.
    Rect {
        x: f64,
        y: f64,
        u: f64,
        v: f64,
        t: f64,
        lambda: f64,
        lhs: f64,
        rhs: f64,
    },
}

impl Witness {
    pub fn lhs(&self) -> f64 {
        match self {
            Witness::Line { lhs, .. } | Witness::Rect { lhs, .. } => *lhs,
        }
    }

    pub fn rhs(&self) -> f64 {
        match self {
            Witness::Line { rhs, .. } | Witness::Rect { rhs, .. } => *rhs,
        }
    }

    /// Re-evaluates the defining inequality on `f` (the two-variable function
    /// for coordinate witnesses) and reports whether it is violated by more
    /// than `tolerance`.
    pub fn recheck(&self, f: &PositiveFunction, r: RParam, tolerance: f64) -> Result<bool> {
        let (lhs, rhs) = match self {
            Witness::Line { x, y, t, fixed, .. } => {
                let line = match fixed {
                    Some(fc) => f.partial_map(fc.axis, fc.value)?,
                    None => f.clone(),
                };
                let lhs = line.eval1(t * x + (1.0 - t) * y)?;
                let rhs = r_combination_1d(r, *t, line.eval1(*x)?, line.eval1(*y)?)?;
                (lhs, rhs)
            }
            Witness::Rect {
                x,
                y,
                u,
                v,
                t,
                lambda,
                ..
            } => {
                let lhs = f.eval2(t * x + (1.0 - t) * y, lambda * u + (1.0 - lambda) * v)?;
                let rhs = r_combination_2d(
                    r,
                    *t,
                    *lambda,
                    f.eval2(*x, *u)?,
                    f.eval2(*x, *v)?,
                    f.eval2(*y, *u)?,
                    f.eval2(*y, *v)?,
                )?;
                (lhs, rhs)
            }
        };
        Ok(lhs > rhs + tolerance)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexityVerdict {
    pub passed: bool,
    pub witness: Option<Witness>,
    pub r: f64,
    pub grid: GridSpec,
    /// Additive tolerance used by the check that produced the witness (or
    /// the largest one used when the check passed).
    pub tolerance: f64,
}

fn tolerance(max_abs: f64) -> f64 {
    CHECK_RTOL * (1.0 + max_abs)
}

fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Checks `f(t·x + (1−t)·y) ≤ M_r(t; f(x), f(y)) + tol` over every ordered
/// pair of grid points and every grid weight.
pub fn check_r_convex_1d(
    f: &PositiveFunction,
    r: RParam,
    grid: &GridSpec,
) -> Result<ConvexityVerdict> {
    grid.validate()?;
    let iv = f.interval()?;
    let xs = iv.grid(grid.points_per_axis);
    let fs = xs.iter().map(|&x| f.eval1(x)).collect::<Result<Vec<_>>>()?;

    let mut cases = Vec::new();
    for i in 0..xs.len() {
        for j in 0..xs.len() {
            if i == j {
                continue;
            }
            for &t in &grid.weights {
                cases.push((i, j, t));
            }
        }
    }
    let lhs = cases
        .iter()
        .map(|&(i, j, t)| f.eval1(t * xs[i] + (1.0 - t) * xs[j]))
        .collect::<Result<Vec<_>>>()?;
    let tol = tolerance(max_abs(&fs).max(max_abs(&lhs)));

    for (&(i, j, t), &l) in cases.iter().zip(&lhs) {
        let rhs = r_combination_1d(r, t, fs[i], fs[j])?;
        if l > rhs + tol {
            return Ok(ConvexityVerdict {
                passed: false,
                witness: Some(Witness::Line {
                    x: xs[i],
                    y: xs[j],
                    t,
                    lhs: l,
                    rhs,
                    fixed: None,
                }),
                r: r.value(),
                grid: grid.clone(),
                tolerance: tol,
            });
        }
    }
    Ok(ConvexityVerdict {
        passed: true,
        witness: None,
        r: r.value(),
        grid: grid.clone(),
        tolerance: tol,
    })
}

/// Checks every partial map on grid lines: first `x ↦ f(x, y_k)` for each
/// grid `y_k`, then `y ↦ f(x_k, y)`. The first failing line's witness is
/// returned with its frozen coordinate.
pub fn check_coordinated_r_convex(
    f: &PositiveFunction,
    r: RParam,
    grid: &GridSpec,
) -> Result<ConvexityVerdict> {
    grid.validate()?;
    let rect = f.rectangle()?;
    let lines: Vec<(Axis, f64)> = rect
        .y
        .grid(grid.points_per_axis)
        .into_iter()
        .map(|y| (Axis::X, y))
        .chain(
            rect.x
                .grid(grid.points_per_axis)
                .into_iter()
                .map(|x| (Axis::Y, x)),
        )
        .collect();

    let verdicts = lines
        .par_iter()
        .map(|&(axis, value)| {
            let line = f.partial_map(axis, value)?;
            check_r_convex_1d(&line, r, grid).map(|v| (axis, value, v))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut worst_tol: f64 = 0.0;
    for (axis, value, v) in verdicts {
        worst_tol = worst_tol.max(v.tolerance);
        if !v.passed {
            let witness = match v.witness {
                Some(Witness::Line {
                    x, y, t, lhs, rhs, ..
                }) => Witness::Line {
                    x,
                    y,
                    t,
                    lhs,
                    rhs,
                    fixed: Some(FixedCoordinate { axis, value }),
                },
                other => other.expect("failed verdict carries a witness"),
            };
            return Ok(ConvexityVerdict {
                passed: false,
                witness: Some(witness),
                r: r.value(),
                grid: grid.clone(),
                tolerance: v.tolerance,
            });
        }
    }
    Ok(ConvexityVerdict {
        passed: true,
        witness: None,
        r: r.value(),
        grid: grid.clone(),
        tolerance: worst_tol,
    })
}

/// One blended coordinate `t·p_i + (1−t)·p_j`.
#[derive(Debug, Clone, Copy)]
struct Blend {
    i: usize,
    j: usize,
    t: f64,
    at: f64,
}

fn blends(points: &[f64], weights: &[f64]) -> Vec<Blend> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        out.push(Blend {
            i,
            j: i,
            t: 1.0,
            at: points[i],
        });
        for j in i + 1..points.len() {
            for &t in weights {
                out.push(Blend {
                    i,
                    j,
                    t,
                    at: t * points[i] + (1.0 - t) * points[j],
                });
            }
        }
    }
    out
}

/// Checks the four-corner inequality
/// `f(t·x + (1−t)·y, λ·u + (1−λ)·v) ≤ M_r(f(x,u), f(x,v), f(y,u), f(y,v))`
/// for all grid pairs on each axis and all weight pairs.
pub fn check_jointly_r_convex(
    f: &PositiveFunction,
    r: RParam,
    grid: &GridSpec,
) -> Result<ConvexityVerdict> {
    grid.validate()?;
    let rect = f.rectangle()?;
    let n = grid.points_per_axis;
    let xs = rect.x.grid(n);
    let ys = rect.y.grid(n);
    let ws = grid.symmetric_weights();
    let bx = blends(&xs, &ws);
    let by = blends(&ys, &ws);

    let corners = xs
        .iter()
        .map(|&x| {
            ys.iter()
                .map(|&y| f.eval2(x, y))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let table = bx
        .par_iter()
        .map(|b| {
            by.iter()
                .map(|c| f.eval2(b.at, c.at))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let max_corner = corners.iter().map(|row| max_abs(row)).fold(0.0, f64::max);
    let max_blend = table.iter().map(|row| max_abs(row)).fold(0.0, f64::max);
    let tol = tolerance(max_corner.max(max_blend));

    let first = bx.par_iter().enumerate().find_map_first(|(kx, b)| {
        by.iter().enumerate().find_map(|(ky, c)| {
            let t = b.t;
            let lambda = c.t;
            let weights = [
                t * lambda,
                t * (1.0 - lambda),
                (1.0 - t) * lambda,
                (1.0 - t) * (1.0 - lambda),
            ];
            let values = [
                corners[b.i][c.i],
                corners[b.i][c.j],
                corners[b.j][c.i],
                corners[b.j][c.j],
            ];
            let rhs = power_mean(r, &weights, &values);
            let lhs = table[kx][ky];
            (lhs > rhs + tol).then(|| Witness::Rect {
                x: xs[b.i],
                y: xs[b.j],
                u: ys[c.i],
                v: ys[c.j],
                t,
                lambda,
                lhs,
                rhs,
            })
        })
    });

    Ok(ConvexityVerdict {
        passed: first.is_none(),
        witness: first,
        r: r.value(),
        grid: grid.clone(),
        tolerance: tol,
    })
}

/// The generator map without the convexity precheck, for bases that are
/// convex by construction.
pub fn transform(g: &PositiveFunction, r: RParam) -> PositiveFunction {
    if r.is_geometric() {
        g.exp()
    } else if r.value() == 1.0 {
        g.clone()
    } else {
        g.powf(1.0 / r.value())
    }
}

fn describe(w: &Option<Witness>) -> String {
    match w {
        Some(w) => serde_json::to_string(w).unwrap_or_default(),
        None => String::new(),
    }
}

/// Turns a convex `g` into an r-convex function: `g^{1/r}` for `r > 0`,
/// `exp(g)` for `r = 0`.
///
/// The result is checked at `r`, which is equivalent to checking `g` for
/// convexity but does not require `g` itself to be positive when `r = 0`.
pub fn make_r_convex_1d(
    g: &PositiveFunction,
    r: RParam,
    grid: &GridSpec,
) -> Result<PositiveFunction> {
    let f = transform(g, r);
    let verdict = check_r_convex_1d(&f, r, grid)?;
    if !verdict.passed {
        return Err(Error::NotConvex(describe(&verdict.witness)));
    }
    Ok(f)
}

/// Two-variable analogue of [`make_r_convex_1d`]: `g` must have convex
/// partial maps; the result is coordinated r-convex.
pub fn make_coordinated_r_convex_2d(
    g: &PositiveFunction,
    r: RParam,
    grid: &GridSpec,
) -> Result<PositiveFunction> {
    let f = transform(g, r);
    let verdict = check_coordinated_r_convex(&f, r, grid)?;
    if !verdict.passed {
        return Err(Error::NotConvex(describe(&verdict.witness)));
    }
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma1Violation {
    pub function: String,
    pub r: f64,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub candidates: usize,
    /// Candidates that passed the joint check and were tested.
    pub jointly_convex: usize,
    /// Candidates that failed the joint check; they carry no obligation.
    pub skipped: usize,
    pub violations: Vec<Lemma1Violation>,
}

/// Runs `functions` through the joint check at `r` and, for each that passes,
/// asserts the coordinated check passes too.
pub fn lemma1_check(
    functions: &[PositiveFunction],
    r: RParam,
    grid: &GridSpec,
) -> Result<Lemma1Report> {
    let outcomes = functions
        .par_iter()
        .map(|f| {
            let joint = check_jointly_r_convex(f, r, grid)?;
            if !joint.passed {
                return Ok(None);
            }
            let coord = check_coordinated_r_convex(f, r, grid)?;
            Ok(Some((coord.passed, coord.witness)))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = Lemma1Report {
        candidates: functions.len(),
        jointly_convex: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for (f, outcome) in functions.iter().zip(outcomes) {
        match outcome {
            None => report.skipped += 1,
            Some((passed, witness)) => {
                report.jointly_convex += 1;
                if !passed {
                    report.violations.push(Lemma1Violation {
                        function: f.to_string(),
                        r: r.value(),
                        witness,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Generates `n` jointly r-convex functions per `r` (exp-of-affine and
/// powers of bilinear bases, plus the constant 1 first) and checks that each
/// is also coordinated r-convex.
pub fn lemma1_harness(
    n: usize,
    rs: &[RParam],
    rect: Rectangle,
    seed: u64,
    grid: &GridSpec,
) -> Result<Lemma1Report> {
    let mut total = Lemma1Report {
        candidates: 0,
        jointly_convex: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for (k, &r) in rs.iter().enumerate() {
        let mut rng = crate::corpus::rng(seed.wrapping_add(k as u64));
        let functions = (0..n)
            .map(|i| {
                let base = Base2d::sample_multiaffine(&mut rng, rect, i);
                transform(&base.function(rect), r)
            })
            .collect::<Vec<_>>();
        let report = lemma1_check(&functions, r, grid)?;
        total.candidates += report.candidates;
        total.jointly_convex += report.jointly_convex;
        total.skipped += report.skipped;
        total.violations.extend(report.violations);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcmodel::Interval;

    fn rp(r: f64) -> RParam {
        RParam::new(r).unwrap()
    }

    fn line(text: &str, lo: f64, hi: f64) -> PositiveFunction {
        PositiveFunction::parse(text, Interval::new(lo, hi).unwrap()).unwrap()
    }

    fn square(text: &str, lo: f64, hi: f64) -> PositiveFunction {
        PositiveFunction::parse(text, Rectangle::from_bounds(lo, hi, lo, hi).unwrap()).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(2, vec![0.5]).is_err());
        assert!(GridSpec::new(5, vec![0.25]).is_err());
        assert!(GridSpec::new(5, vec![0.5, 1.0]).is_err());
        assert!(GridSpec::new(3, vec![0.5]).is_ok());
    }

    #[test]
    fn symmetric_weights_close_under_complement() {
        let g = GridSpec::new(5, vec![0.1, 0.5, 0.8]).unwrap();
        let ws = g.symmetric_weights();
        assert_eq!(ws.len(), 5);
        assert!((ws[0] - 0.1).abs() < 1e-15 && (ws[4] - 0.9).abs() < 1e-15);
    }

    #[test]
    fn exp_is_log_convex() {
        let v =
            check_r_convex_1d(&line("exp(x)", 0.0, 1.0), rp(0.0), &GridSpec::default()).unwrap();
        assert!(v.passed && v.witness.is_none());
    }

    #[test]
    fn square_is_half_convex_with_equality() {
        let f = line("x^2", 1.0, 2.0);
        let grid = GridSpec::default();
        assert!(check_r_convex_1d(&f, rp(0.5), &grid).unwrap().passed);
        // sqrt(f) = x is affine: every tested triple is an equality.
        for x in [1.0, 1.25, 2.0] {
            for y in [1.5, 2.0] {
                for t in [0.1, 0.5, 0.9] {
                    let lhs = f.eval1(t * x + (1.0 - t) * y).unwrap();
                    let rhs =
                        r_combination_1d(rp(0.5), t, f.eval1(x).unwrap(), f.eval1(y).unwrap())
                            .unwrap();
                    assert!((lhs - rhs).abs() < 1e-12 * rhs);
                }
            }
        }
    }

    #[test]
    fn sqrt_is_not_convex_and_witness_rechecks() {
        let f = line("x^0.5", 1.0, 4.0);
        let v = check_r_convex_1d(&f, rp(1.0), &GridSpec::default()).unwrap();
        assert!(!v.passed);
        let w = v.witness.clone().unwrap();
        assert!(w.lhs() > w.rhs());
        assert!(w.recheck(&f, rp(1.0), v.tolerance).unwrap());

        // The extreme midpoint case: sqrt(2.5) > (1 + 2) / 2.
        let lhs = f.eval1(2.5).unwrap();
        let rhs = r_combination_1d(rp(1.0), 0.5, 1.0, 2.0).unwrap();
        assert!((lhs - 1.5811388300841898).abs() < 1e-15 && rhs == 1.5);
    }

    #[test]
    fn positivity_violation_surfaces() {
        let f = line("x - 0.5", 0.0, 1.0);
        assert!(matches!(
            check_r_convex_1d(&f, rp(1.0), &GridSpec::default()),
            Err(Error::NonPositive { .. })
        ));
    }

    #[test]
    fn coordinated_examples() {
        let grid = GridSpec::default();
        assert!(
            check_coordinated_r_convex(&square("exp(x+y)", 0.0, 1.0), rp(0.0), &grid)
                .unwrap()
                .passed
        );
        for r in [0.0, 0.5, 1.0, 3.0] {
            assert!(
                check_coordinated_r_convex(&square("2.5", 0.0, 1.0), rp(r), &grid)
                    .unwrap()
                    .passed
            );
        }
        assert!(
            check_coordinated_r_convex(&square("(x*y)^2", 1.0, 2.0), rp(0.5), &grid)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn coordinated_failure_names_the_line() {
        // Concave in y along every vertical line.
        let f = square("x^2 + y^0.5", 1.0, 2.0);
        let v = check_coordinated_r_convex(&f, rp(1.0), &GridSpec::default()).unwrap();
        assert!(!v.passed);
        match v.witness.clone().unwrap() {
            Witness::Line {
                fixed: Some(fc), ..
            } => {
                assert_eq!(fc.axis, Axis::Y);
                assert_eq!(fc.value, 1.0);
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(v
            .witness
            .unwrap()
            .recheck(&f, rp(1.0), v.tolerance)
            .unwrap());
    }

    #[test]
    fn joint_examples() {
        let grid = GridSpec::new(9, GridSpec::default().weights).unwrap();
        let k = check_jointly_r_convex(&square("3", 0.0, 1.0), rp(0.7), &grid).unwrap();
        assert!(k.passed);
        assert!(
            check_jointly_r_convex(&square("exp(x+y)", 0.0, 1.0), rp(0.0), &grid)
                .unwrap()
                .passed
        );
        assert!(
            check_jointly_r_convex(&square("exp(x)+exp(y)", 0.0, 1.0), rp(1.0), &grid)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn joint_failure_witness_rechecks() {
        let f = square("(x + y)^0.5", 1.0, 2.0);
        let v = check_jointly_r_convex(&f, rp(1.0), &GridSpec::with_points(5).unwrap()).unwrap();
        assert!(!v.passed);
        let w = v.witness.unwrap();
        assert!(matches!(w, Witness::Rect { .. }));
        assert!(w.recheck(&f, rp(1.0), v.tolerance).unwrap());
    }

    #[test]
    fn generator_examples_1d() {
        let grid = GridSpec::default();
        let g = line("x", 1.0, 2.0);
        let f = make_r_convex_1d(&g, rp(0.5), &grid).unwrap();
        assert!((f.eval1(1.5).unwrap() - 2.25).abs() < 1e-15);
        assert!(check_r_convex_1d(&f, rp(0.5), &grid).unwrap().passed);

        let e = make_r_convex_1d(&g, rp(0.0), &grid).unwrap();
        assert_eq!(e.eval1(1.2).unwrap(), 1.2f64.exp());
        assert!(check_r_convex_1d(&e, rp(0.0), &grid).unwrap().passed);

        let q = line("x^2+1", 0.0, 1.0);
        let same = make_r_convex_1d(&q, rp(1.0), &grid).unwrap();
        assert_eq!(same.expr(), q.expr());

        assert!(matches!(
            make_r_convex_1d(&line("x^0.5", 1.0, 4.0), rp(1.0), &grid),
            Err(Error::NotConvex(_))
        ));
    }

    #[test]
    fn generator_examples_2d() {
        let grid = GridSpec::default();
        let g = square("x+y+1", 0.0, 1.0);
        let f = make_coordinated_r_convex_2d(&g, rp(1.0), &grid).unwrap();
        assert!(
            check_coordinated_r_convex(&f, rp(1.0), &grid)
                .unwrap()
                .passed
        );

        let g = square("x+y", 0.0, 1.0);
        let f = make_coordinated_r_convex_2d(&g, rp(0.0), &grid).unwrap();
        assert_eq!(f.eval2(0.25, 0.5).unwrap(), 0.75f64.exp());
        assert!(
            check_coordinated_r_convex(&f, rp(0.0), &grid)
                .unwrap()
                .passed
        );

        let g = square("x*y+1", 1.0, 2.0);
        let f = make_coordinated_r_convex_2d(&g, rp(0.5), &grid).unwrap();
        assert!((f.eval2(1.5, 2.0).unwrap() - 16.0).abs() < 1e-12);
        assert!(
            check_coordinated_r_convex(&f, rp(0.5), &grid)
                .unwrap()
                .passed
        );

        assert!(
            make_coordinated_r_convex_2d(&square("(x*y)^0.5", 1.0, 2.0), rp(1.0), &grid).is_err()
        );
    }

    #[test]
    fn lemma1_trivial_and_skip_paths() {
        let grid = GridSpec::with_points(5).unwrap();
        let rect = Rectangle::unit();
        let k = PositiveFunction::constant(2.0, rect).unwrap();
        let report = lemma1_check(&[k], rp(1.0), &grid).unwrap();
        assert_eq!(report.jointly_convex, 1);
        assert!(report.violations.is_empty());

        // Concave candidates fail the joint check and are skipped, not
        // counted against the lemma.
        let concave: Vec<_> = (1..=10)
            .map(|k| PositiveFunction::parse(&format!("(x*y + {k})^0.5"), rect).unwrap())
            .collect();
        let report = lemma1_check(&concave, rp(1.0), &grid).unwrap();
        assert_eq!(report.skipped, 10);
        assert_eq!(report.jointly_convex, 0);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn lemma1_small_harness_run() {
        let grid = GridSpec::with_points(5).unwrap();
        let report = lemma1_harness(6, &[rp(0.0), rp(1.0)], Rectangle::unit(), 1, &grid).unwrap();
        assert_eq!(report.candidates, 12);
        assert_eq!(report.jointly_convex, 12);
        assert!(report.violations.is_empty());
    }
}
