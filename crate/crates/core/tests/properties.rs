use std::ops::{Add, Div, Mul, Neg, Sub};

use proptest::prelude::*;

use rconvex::funcmodel::parse_expr;
use rconvex::means::{r_combination_2d, weighted_power_mean, WeightVector};
use rconvex::quadrature::{integrate_1d, integrate_2d, integrate_fn_1d};
use rconvex::{Axis, Expr, Interval, PositiveFunction, QuadratureConfig, RParam, Rectangle};

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::X),
        Just(Expr::Y),
        (0u32..1000).prop_map(|k| Expr::Const(f64::from(k) / 8.0)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.add(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.sub(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.mul(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.div(b)),
            inner.clone().prop_map(Expr::neg),
            inner.clone().prop_map(Expr::exp),
            inner.clone().prop_map(Expr::ln),
            (inner, -8i32..8).prop_map(|(a, p)| a.powf(f64::from(p) / 4.0)),
        ]
    })
}

/// Sums of positive exponentials of affine forms: positive everywhere.
fn positive_2d() -> impl Strategy<Value = (String, f64, f64)> {
    (
        0.1f64..3.0,
        -1.5f64..1.5,
        -1.5f64..1.5,
        0.0f64..2.0,
        0.0f64..2.0,
    )
        .prop_map(|(c, a, b, q, s)| {
            let text = format!("{c} + exp({a}*x + {b}*y) + {q}*x*y + {s}*x^2");
            (text, a, b)
        })
}

fn weights_and_values() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2usize..6).prop_flat_map(|n| {
        (
            prop::collection::vec(0.01f64..1.0, n),
            prop::collection::vec(1e-3f64..1e3, n),
        )
            .prop_map(|(mut w, v)| {
                let total: f64 = w.iter().sum();
                w.iter_mut().for_each(|x| *x /= total);
                let head: f64 = w[..w.len() - 1].iter().sum();
                let last = w.len() - 1;
                w[last] = 1.0 - head;
                (w, v)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_parse_round_trip(e in expr_strategy()) {
        let text = e.to_string();
        let back = parse_expr(&text).unwrap();
        prop_assert_eq!(back, e, "{}", text);
    }

    #[test]
    fn partial_maps_agree_with_the_function(
        (text, _, _) in positive_2d(),
        fixed in 0.0f64..=1.0,
        t in 0.0f64..=1.0,
    ) {
        let f = PositiveFunction::parse(&text, Rectangle::unit()).unwrap();
        let along_x = f.partial_map(Axis::X, fixed).unwrap();
        let along_y = f.partial_map(Axis::Y, fixed).unwrap();
        prop_assert_eq!(along_x.arity(), 1);
        prop_assert_eq!(along_x.eval1(t).unwrap(), f.eval2(t, fixed).unwrap());
        prop_assert_eq!(along_y.eval1(t).unwrap(), f.eval2(fixed, t).unwrap());
    }

    #[test]
    fn power_mean_bracketing_and_order(
        (w, v) in weights_and_values(),
        r in 0.0f64..5.0,
        dr in 0.0f64..5.0,
    ) {
        let wv = WeightVector::new(w, v.clone()).unwrap();
        let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = v.iter().copied().fold(0.0, f64::max);
        let m = weighted_power_mean(RParam::new(r).unwrap(), &wv);
        let m2 = weighted_power_mean(RParam::new(r + dr).unwrap(), &wv);
        prop_assert!(m >= lo * (1.0 - 1e-14) && m <= hi * (1.0 + 1e-14));
        prop_assert!(m <= m2 * (1.0 + 1e-14));
    }

    #[test]
    fn two_dimensional_combination_uses_tensor_weights(
        r in 0.0f64..4.0,
        t in 0.0f64..=1.0,
        lambda in 0.0f64..=1.0,
        vals in prop::array::uniform4(0.01f64..50.0),
    ) {
        let rp = RParam::new(r).unwrap();
        let c = r_combination_2d(rp, t, lambda, vals[0], vals[1], vals[2], vals[3]).unwrap();
        let w = vec![t * lambda, t * (1.0 - lambda), (1.0 - t) * lambda, (1.0 - t) * (1.0 - lambda)];
        let direct = weighted_power_mean(rp, &WeightVector::new(w, vals.to_vec()).unwrap());
        prop_assert!((c - direct).abs() <= 1e-12 * direct);
    }

    #[test]
    fn quadrature_is_linear(
        a in 0.1f64..3.0,
        b in 0.1f64..3.0,
        k in -2.0f64..2.0,
    ) {
        let iv = Interval::new(-0.5, 1.5).unwrap();
        let cfg = QuadratureConfig::default();
        let f = PositiveFunction::parse(&format!("exp({k}*x)"), iv).unwrap();
        let g = PositiveFunction::parse("x^2 + 1", iv).unwrap();
        let combo = PositiveFunction::parse(&format!("{a}*exp({k}*x) + {b}*(x^2 + 1)"), iv).unwrap();
        let lhs = integrate_1d(&combo, iv, cfg).unwrap().value;
        let rhs = a * integrate_1d(&f, iv, cfg).unwrap().value + b * integrate_1d(&g, iv, cfg).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn quadrature_is_separable(a in -1.5f64..1.5, c in 0.1f64..2.0) {
        let rect = Rectangle::from_bounds(0.0, 1.0, -1.0, 2.0).unwrap();
        let cfg = QuadratureConfig::default();
        let f = PositiveFunction::parse(&format!("exp({a}*x) * (y^2 + {c})"), rect).unwrap();
        let both = integrate_2d(&f, rect, cfg).unwrap();
        let ix = integrate_fn_1d(|x: f64| Ok::<_, rconvex::Error>((a * x).exp()), rect.x, cfg).unwrap();
        let iy = integrate_fn_1d(|y: f64| Ok::<_, rconvex::Error>(y * y + c), rect.y, cfg).unwrap();
        let tol = both.error_estimate + ix.error_estimate * iy.value.abs()
            + iy.error_estimate * ix.value.abs() + 1e-13 * both.value.abs();
        prop_assert!((both.value - ix.value * iy.value).abs() <= tol);
    }
}
