use std::f64::consts::PI;

use proptest::prelude::*;
use squircle_core::fields2d::{eval_fg, eval_lame, eval_oblique, eval_periodic, frantz_point};
use squircle_core::fields3d::{
    eval_oblique3d, eval_periodic3d, eval_sphube, eval_toroid, eval_toroid_octic,
};
use squircle_core::oracle::*;
use squircle_core::{make_field2d, ShapeSpec2D};

fn circle_error(spec: ShapeSpec2D) -> f64 {
    let f = make_field2d(&spec).unwrap();
    radial_profile_report(&f, &half_offset_angles(360), 1.5, |_| 1.0)
        .unwrap()
        .max_abs_error
}

#[test]
fn exact_circles() {
    assert!(circle_error(ShapeSpec2D::lame(2.0, 1.0)) <= 1e-12);
    assert!(circle_error(ShapeSpec2D::fg(0.0, 1.0)) <= 1e-12);
}

#[test]
fn small_squareness_approaches_the_circle() {
    for spec in [ShapeSpec2D::periodic(1e-3, 1.0), ShapeSpec2D::oblique(1e-3, 1.0, 0.0)] {
        assert!(circle_error(spec) <= 1e-3, "{spec}");
    }
    let frantz = half_offset_angles(360)
        .into_iter()
        .map(|t| {
            let (x, y) = frantz_point(t, 1e-3, 1.0);
            (x.hypot(y) - 1.0).abs()
        })
        .fold(0.0, f64::max);
    assert!(frantz <= 1e-3);
}

#[test]
fn circle_error_shrinks_monotonically() {
    let families: [fn(f64) -> ShapeSpec2D; 3] = [
        |s| ShapeSpec2D::periodic(s, 1.0),
        |s| ShapeSpec2D::oblique(s, 1.0, 0.0),
        |s| ShapeSpec2D::fg(s, 1.0),
    ];
    for make in families {
        let errors: Vec<f64> = [0.8, 0.4, 0.1, 0.01, 1e-3].iter().map(|&s| circle_error(make(s))).collect();
        assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    }
    let errors: Vec<f64> = [6.0, 4.0, 3.0, 2.5, 2.1]
        .iter()
        .map(|&p| circle_error(ShapeSpec2D::lame(p, 1.0)))
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
}

#[test]
fn frantz_limit() {
    let worst = (0..3600)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / 3600.0;
            let (x, y) = frantz_point(t, 1e-3, 1.0);
            (x - t.cos()).hypot(y - t.sin())
        })
        .fold(0.0, f64::max);
    assert!(worst <= 1e-6, "{worst}");
}

#[test]
fn square_profiles() {
    let angles = half_offset_angles(360);
    let axis: [ShapeSpec2D; 3] = [
        ShapeSpec2D::lame(f64::INFINITY, 1.0),
        ShapeSpec2D::fg(1.0, 1.0),
        ShapeSpec2D::periodic(1.0, 1.0),
    ];
    for spec in axis {
        let f = make_field2d(&spec).unwrap();
        let rep = radial_profile_report(&f, &angles, 1.5, |t| axis_square_radius(t, 1.0)).unwrap();
        assert!(rep.max_abs_error <= 1e-9, "{spec}: {}", rep.max_abs_error);
    }
    for spec in [ShapeSpec2D::lame(1.0, 1.0), ShapeSpec2D::oblique(1.0, 1.0, 0.0)] {
        let f = make_field2d(&spec).unwrap();
        let rep = radial_profile_report(&f, &angles, 1.5, |t| tilted_square_radius(t, 1.0)).unwrap();
        assert!(rep.max_abs_error <= 1e-9, "{spec}: {}", rep.max_abs_error);
    }
}

#[test]
fn square_case_lines() {
    for (family, r) in [
        (LimitFamily::Periodic, 1.0),
        (LimitFamily::Oblique, 1.0),
        (LimitFamily::Periodic, 3.0),
    ] {
        let residual = square_case_check(family, r, 1000, 11);
        assert!(residual <= 1e-12, "{family:?} r={r}: {residual}");
    }
}

#[test]
fn quadratic_limit_convergence() {
    let y = midpoint_y_grid(50);
    for family in [LimitFamily::Periodic, LimitFamily::Oblique] {
        let rep = limit_convergence_check(family, &y, &[0.2, 0.1, 0.05]).unwrap();
        assert!(rep.ratios_within(3.5, 4.5), "{family:?}: {rep:?}");
        assert!(rep.errors.iter().all(|&e| e > 0.0));
    }
}

// Extended-precision reference values for the 50-point grid.
#[test]
fn convergence_errors_match_reference() {
    let y = midpoint_y_grid(50);
    let cases = [
        (LimitFamily::Periodic, [6.43e-4, 1.60e-4, 4.01e-5]),
        (LimitFamily::Oblique, [1.28e-3, 3.21e-4, 8.02e-5]),
    ];
    for (family, expected) in cases {
        let rep = limit_convergence_check(family, &y, &[0.2, 0.1, 0.05]).unwrap();
        for (got, want) in rep.errors.iter().zip(expected) {
            assert!((got - want).abs() / want < 0.01, "{family:?}: {got} vs {want}");
        }
    }
}

#[test]
fn toroid_forms_share_zeros() {
    let (big_r, r) = (2.0, 0.5);
    for s in [0.0, 0.5, 1.0] {
        let root = |x: f64, y: f64, z: f64| eval_toroid(x, y, z, s, big_r, r);
        let octic = |x: f64, y: f64, z: f64| eval_toroid_octic(x, y, z, s, big_r, r);
        let residual = zero_set_residual(&root, &octic, &toroid_probes(big_r, r, 1000, 3)).unwrap();
        assert!(residual <= 1e-9 * big_r.powi(4), "s={s}: {residual}");
    }
}

#[test]
fn sham_schwarz_reduction() {
    let oblique = |x: f64, y: f64, z: f64| eval_oblique3d(x, y, z, 1.0, PI, 1.0);
    let schwarz = |x: f64, y: f64, z: f64| -(x.cos() + y.cos() + z.cos());
    let points = random_points(10_000, [-2.0 * PI; 3], [2.0 * PI; 3], 5);
    assert!(field_difference(&oblique, &schwarz, &points) <= 1e-12);
    let residual = zero_set_residual(&oblique, &schwarz, &schwarz_probes(1000, 5)).unwrap();
    assert!(residual <= 1e-12, "{residual}");
}

#[test]
fn plane_restrictions_are_exact() {
    for p in random_points(10_000, [-3.0; 3], [3.0; 3], 9) {
        let (x, y) = (p[0], p[1]);
        let s = (p[2] + 3.0) / 6.0;
        assert_eq!(eval_sphube(x, y, 0.0, s, 1.3), eval_fg(x, y, s, 1.3));
        if s > 0.0 {
            assert_eq!(eval_periodic3d(x, y, 0.0, s, 1.3), eval_periodic(x, y, s, 1.3));
        }
    }
}

#[test]
fn periodicity() {
    let periodic = |x: f64, y: f64| eval_periodic(x, y, 0.5, 1.0);
    let oblique = |x: f64, y: f64| eval_oblique(x, y, 0.5, 1.0, 0.0);
    assert!(periodicity_check2d(&periodic, 8.0, 1000, 1) <= 1e-9);
    assert!(periodicity_check2d(&oblique, 4.0, 1000, 1) <= 1e-9);
    let periodic3 = |x: f64, y: f64, z: f64| eval_periodic3d(x, y, z, 0.5, 1.0);
    let oblique3 = |x: f64, y: f64, z: f64| eval_oblique3d(x, y, z, 0.5, 1.0, 0.0);
    assert!(periodicity_check3d(&periodic3, 8.0, 1000, 1) <= 1e-9);
    assert!(periodicity_check3d(&oblique3, 4.0, 1000, 1) <= 1e-9);

    let fg = |x: f64, y: f64| eval_fg(x, y, 0.5, 1.0);
    let lame = |x: f64, y: f64| eval_lame(x, y, 4.0, 1.0);
    assert!(periodicity_check2d(&fg, 4.0, 1000, 1) > 0.1);
    assert!(periodicity_check2d(&lame, 8.0, 1000, 1) > 0.1);
}

#[test]
fn overshoot_recession_has_no_crossing() {
    // 2D at h = 2 and 3D at h = 4: the field never becomes positive.
    let n = 64;
    let mut worst2: f64 = f64::NEG_INFINITY;
    let mut worst3: f64 = f64::NEG_INFINITY;
    for i in 0..=n {
        for j in 0..=n {
            let (x, y) = (-1.0 + 2.0 * i as f64 / n as f64, -1.0 + 2.0 * j as f64 / n as f64);
            worst2 = worst2.max(eval_oblique(x, y, 1.0, 1.0, 2.0));
            for k in 0..=n {
                let z = -1.0 + 2.0 * k as f64 / n as f64;
                worst3 = worst3.max(eval_oblique3d(x, y, z, 1.0, 1.0, 4.0));
            }
        }
    }
    assert!(worst2 <= 0.0 && worst3 <= 0.0);
    // Maxima sit on the odd lattice, e.g. (1, 1) and (1, 1, 1).
    assert_eq!(eval_oblique(1.0, 1.0, 1.0, 1.0, 2.0), 0.0);
    assert_eq!(eval_oblique3d(1.0, 1.0, 1.0, 1.0, 1.0, 4.0), 0.0);
    // Just below full recession the curve still exists around (1, 1).
    let near = |x: f64, y: f64| -eval_oblique(x, y, 1.0, 1.0, 1.9);
    assert!(radial_profile(&|x: f64, y: f64| near(1.0 + x, 1.0 + y), 0.3, 0.5).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn larger_exponent_encloses(p1 in 1.0f64..8.0, dp in 0.05f64..8.0) {
        let p2 = p1 + dp;
        let inner = |x: f64, y: f64| eval_lame(x, y, p1, 1.0);
        for t in half_offset_angles(360) {
            let rho = radial_profile(&inner, t, 1.5).unwrap();
            let v = eval_lame(rho * t.cos(), rho * t.sin(), p2, 1.0);
            // Close to the axes the two curves are closer than the root
            // tolerance; there only rule out a crossing beyond it.
            let (c, s) = (t.cos().abs(), t.sin().abs());
            if c.min(s) / c.max(s) > 0.2 {
                prop_assert!(v < 0.0, "p1={} p2={} t={} v={}", p1, p2, t, v);
            } else {
                prop_assert!(v <= 2.0 * BISECTION_TOLERANCE, "p1={} p2={} t={} v={}", p1, p2, t, v);
            }
        }
    }

    #[test]
    fn anchors_on_the_axes(s in 0.0f64..=1.0, p in 1.0f64..50.0, r in 0.1f64..10.0) {
        let fields: [&dyn Fn(f64, f64) -> f64; 4] = [
            &|x, y| eval_lame(x, y, p, r),
            &|x, y| eval_fg(x, y, s, r),
            &|x, y| eval_periodic(x, y, s.max(1e-9), r),
            &|x, y| eval_oblique(x, y, s.max(1e-9), r, 0.0),
        ];
        for f in fields {
            prop_assert!(f(r, 0.0).abs() <= 1e-12 * r * r.max(1.0));
            prop_assert!(f(0.0, r).abs() <= 1e-12 * r * r.max(1.0));
            prop_assert!(f(0.0, 0.0) < 0.0);
        }
    }
}
