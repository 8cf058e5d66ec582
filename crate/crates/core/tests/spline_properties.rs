use cntplate::quadrature::GaussLegendre;
use cntplate::spline::{
    build_constraint_transform, eval_b3, eval_hermite, eval_series, hermite_all, interpolate_series, segment,
    EndCondition, KnotGrid,
};
use nalgebra::DVector;
use proptest::prelude::*;

const CONDITIONS: [EndCondition; 3] = [EndCondition::Free, EndCondition::Simple, EndCondition::Clamped];

fn rank(m: &nalgebra::DMatrix<f64>) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let tol = 1e-10 * sv.max();
    sv.iter().filter(|&&s| s > tol).count()
}

#[test]
fn one_sided_limits_agree_at_interior_knots() {
    let grid = KnotGrid::new(2.0, 8).unwrap();
    let eps = 1e-7;
    for i in grid.indices() {
        for j in -1..=1 {
            let y = grid.knot(i + j);
            if y <= eps || y >= grid.length_a() - eps {
                continue;
            }
            for d in 0..=2 {
                let lo = eval_b3(&grid, i, y - eps, d);
                let hi = eval_b3(&grid, i, y + eps, d);
                let scale = grid.h_knot().powi(-(d as i32));
                assert!((lo - hi).abs() < 1e-5 * scale, "i={i} d={d}: {lo} vs {hi}");
            }
        }
    }
}

#[test]
fn third_derivative_jumps_only_at_knots() {
    // Piece derivatives of a cubic are constant in the third order.
    for seg in 0..4 {
        let d3 = |u: f64| (segment(seg, u + 1e-3, 2) - segment(seg, u - 1e-3, 2)) / 2e-3;
        assert!((d3(0.3) - d3(0.7)).abs() < 1e-8);
    }
}

#[test]
fn span_products_are_integrated_exactly() {
    // Products of two cubics are degree 6; the 4-point rule is exact to degree 7.
    let grid = KnotGrid::new(1.0, 6).unwrap();
    let four = GaussLegendre::new(4);
    let ten = GaussLegendre::new(10);
    let h = grid.h_knot();
    for span in 0..grid.m_sections() {
        let (a, b) = (span as f64 * h, (span + 1) as f64 * h);
        for i in grid.indices() {
            for j in grid.indices() {
                for (di, dj) in [(0, 0), (1, 1), (2, 2), (2, 0)] {
                    let f = |y: f64| eval_b3(&grid, i, y, di) * eval_b3(&grid, j, y, dj);
                    let (p, q) = (four.integrate(a, b, f), ten.integrate(a, b, f));
                    assert!((p - q).abs() < 1e-12 * (1.0 + q.abs()), "{i},{j},{di},{dj}");
                }
            }
        }
    }
}

#[test]
fn constraint_transform_shapes() {
    let grid = KnotGrid::new(1.5, 7).unwrap();
    let n = grid.n_splines();
    for e0 in CONDITIONS {
        for e1 in CONDITIONS {
            let t = build_constraint_transform(&grid, e0, e1);
            let removed = |e| match e {
                EndCondition::Free => 0,
                EndCondition::Simple => 1,
                EndCondition::Clamped => 2,
            };
            assert_eq!(t.n_full(), n);
            assert_eq!(t.n_reduced(), n - removed(e0) - removed(e1));
            assert_eq!(rank(&t.matrix), t.n_reduced());
        }
    }
    let cc = build_constraint_transform(&grid, EndCondition::Clamped, EndCondition::Clamped);
    assert_eq!(cc.n_reduced(), grid.m_sections() - 1);
}

#[test]
fn hermite_functions_reproduce_cubics() {
    let b = 0.37;
    let f = |x: f64| 1.0 - 2.0 * x + 3.0 * x * x - 4.0 * x * x * x;
    let df = |x: f64| -2.0 + 6.0 * x - 12.0 * x * x;
    let nodal = [f(0.0), df(0.0), f(b), df(b)];
    for k in 0..=20 {
        let x = b * k as f64 / 20.0;
        let h = hermite_all(b, x);
        let v: f64 = (0..4).map(|i| h[0][i] * nodal[i]).sum();
        let dv: f64 = (0..4).map(|i| h[1][i] * nodal[i]).sum();
        assert!((v - f(x)).abs() < 1e-13 && (dv - df(x)).abs() < 1e-12);
        for (d, row) in h.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                assert_eq!(*v, eval_hermite(b, i + 1, x, d).unwrap());
            }
        }
    }
    assert!(eval_hermite(b, 1, b * 1.01, 0).is_err());
    assert!(eval_hermite(b, 5, 0.0, 0).is_err());
}

#[test]
fn complete_interpolation_reproduces_cubics() {
    let grid = KnotGrid::new(3.0, 9).unwrap();
    let f = |y: f64| 0.5 + y - 0.25 * y * y + 0.1 * y * y * y;
    let df = |y: f64| 1.0 - 0.5 * y + 0.3 * y * y;
    let amps = interpolate_series(&grid, f, df);
    for k in 0..=60 {
        let y = 3.0 * k as f64 / 60.0;
        assert!((eval_series(&grid, &amps, y, 0).unwrap() - f(y)).abs() < 1e-12);
        assert!((eval_series(&grid, &amps, y, 1).unwrap() - df(y)).abs() < 1e-11);
    }
}

proptest! {
    #[test]
    fn partition_of_unity(len in 0.1f64..10.0, m in 3usize..40, s in 0.0f64..1.0) {
        let grid = KnotGrid::new(len, m).unwrap();
        let y = s * len;
        let ones = vec![1.0; grid.n_splines()];
        prop_assert!((eval_series(&grid, &ones, y, 0).unwrap() - 1.0).abs() < 1e-12);
        prop_assert!(eval_series(&grid, &ones, y, 1).unwrap().abs() < 1e-9 / grid.h_knot());
    }

    #[test]
    fn linear_reproduction(len in 0.1f64..10.0, m in 3usize..40, s in 0.0f64..1.0) {
        let grid = KnotGrid::new(len, m).unwrap();
        let y = s * len;
        let knots: Vec<f64> = grid.indices().map(|i| grid.knot(i)).collect();
        prop_assert!((eval_series(&grid, &knots, y, 0).unwrap() - y).abs() < 1e-12 * len.max(1.0));
        prop_assert!((eval_series(&grid, &knots, y, 1).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn constrained_series_satisfy_end_conditions(
        m in 3usize..20,
        e0 in 1usize..3,
        e1 in 1usize..3,
        seed in proptest::collection::vec(-1.0f64..1.0, 20),
    ) {
        let grid = KnotGrid::new(1.3, m).unwrap();
        let (c0, c1) = (CONDITIONS[e0], CONDITIONS[e1]);
        let t = build_constraint_transform(&grid, c0, c1);
        let reduced = DVector::from_iterator(t.n_reduced(), seed.iter().cycle().copied().take(t.n_reduced()));
        let full: Vec<f64> = (&t.matrix * reduced).iter().copied().collect();
        let a = grid.length_a();
        prop_assert!(eval_series(&grid, &full, 0.0, 0).unwrap().abs() < 1e-12);
        prop_assert!(eval_series(&grid, &full, a, 0).unwrap().abs() < 1e-12);
        let h = grid.h_knot();
        if c0 == EndCondition::Clamped {
            prop_assert!(eval_series(&grid, &full, 0.0, 1).unwrap().abs() < 1e-11 / h);
        }
        if c1 == EndCondition::Clamped {
            prop_assert!(eval_series(&grid, &full, a, 1).unwrap().abs() < 1e-11 / h);
        }
    }
}
