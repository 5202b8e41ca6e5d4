//! Verification suites behind `squircle verify`.
//!
//! Each check measures one number and compares it with a bound. The groups
//! mirror the properties the shape families are expected to have: circle
//! limits, square cases, quadratic convergence of the limits, equivalent
//! forms, periodicity, and closed-mesh topology.

use std::f64::consts::PI;
use std::fmt;

use clap::ValueEnum;
use squircle_core::fields2d::{eval_fg, eval_lame, eval_oblique, eval_periodic, frantz_point};
use squircle_core::fields3d::{
    eval_oblique3d, eval_periodic3d, eval_sphube, eval_toroid, eval_toroid_octic,
};
use squircle_core::oracle::{
    axis_square_radius, field_difference, half_offset_angles, limit_convergence_check,
    midpoint_y_grid, periodicity_check2d, periodicity_check3d, radial_profile_report,
    random_points, schwarz_probes, square_case_check, tilted_square_radius, toroid_probes,
    zero_set_residual, LimitFamily,
};
use squircle_core::{make_field2d, make_field3d, mesh_stats, ShapeSpec2D, ShapeSpec3D};

use crate::parallel::Engine;

const SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    Above(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub bound: Bound,
    pub detail: Option<String>,
}

impl Check {
    fn at_most(name: impl Into<String>, measured: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            measured,
            bound: Bound::AtMost(bound),
            detail: None,
        }
    }

    fn above(name: impl Into<String>, measured: f64, bound: f64) -> Self {
        Check {
            bound: Bound::Above(bound),
            ..Check::at_most(name, measured, 0.0)
        }
    }

    fn failed(name: impl Into<String>, why: impl fmt::Display) -> Self {
        Check {
            detail: Some(format!("error=\"{why}\"")),
            ..Check::at_most(name, f64::NAN, 0.0)
        }
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn passed(&self) -> bool {
        match self.bound {
            Bound::AtMost(b) => self.measured <= b,
            Bound::Above(b) => self.measured > b,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (op, b) = match self.bound {
            Bound::AtMost(b) => ("<=", b),
            Bound::Above(b) => (">", b),
        };
        write!(f, "{} measured={:.3e} bound{op}{b:.1e}", self.name, self.measured)?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        f.write_str(if self.passed() { " PASS" } else { " FAIL" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Limits,
    Equivalence,
    Mesh,
    Square,
}

pub fn run_suite(suite: Suite, engine: &Engine) -> Vec<Check> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Limits) {
        out.extend(circle_limits());
        out.extend(limit_convergence());
    }
    if matches!(suite, Suite::All | Suite::Square) {
        out.extend(square_cases());
    }
    if matches!(suite, Suite::All | Suite::Equivalence) {
        out.extend(equivalences());
        out.extend(periodicity());
    }
    if matches!(suite, Suite::All | Suite::Mesh) {
        out.extend(mesh_topology(engine));
    }
    out
}

fn profile_check(name: &str, spec: ShapeSpec2D, reference: impl Fn(f64) -> f64, bound: f64) -> Check {
    let field = match make_field2d(&spec) {
        Ok(f) => f,
        Err(e) => return Check::failed(name, e),
    };
    let r_max = 1.5 * spec.radius;
    match radial_profile_report(&field, &half_offset_angles(360), r_max, reference) {
        Ok(rep) => Check::at_most(name, rep.max_abs_error, bound),
        Err(e) => Check::failed(name, e),
    }
}

/// Small-squareness members against the circle of radius `r`.
pub fn circle_limits() -> Vec<Check> {
    let circle = |_| 1.0;
    let frantz = half_offset_angles(360)
        .into_iter()
        .map(|t| {
            let (x, y) = frantz_point(t, 1e-3, 1.0);
            (x.hypot(y) - 1.0).abs()
        })
        .fold(0.0, f64::max);
    vec![
        profile_check("circle_lame_p2", ShapeSpec2D::lame(2.0, 1.0), circle, 1e-12),
        profile_check("circle_fg_s0", ShapeSpec2D::fg(0.0, 1.0), circle, 1e-12),
        profile_check("circle_periodic_s1e-3", ShapeSpec2D::periodic(1e-3, 1.0), circle, 1e-3),
        profile_check("circle_oblique_s1e-3", ShapeSpec2D::oblique(1e-3, 1.0, 0.0), circle, 1e-3),
        Check::at_most("circle_frantz_s1e-3", frantz, 1e-3),
    ]
}

/// Full-squareness members against the exact squares, and the line
/// arrangements of the periodic families.
pub fn square_cases() -> Vec<Check> {
    let axis = |t| axis_square_radius(t, 1.0);
    let tilted = |t| tilted_square_radius(t, 1.0);
    vec![
        profile_check("square_lame_pinf", ShapeSpec2D::lame(f64::INFINITY, 1.0), axis, 1e-9),
        profile_check("square_fg_s1", ShapeSpec2D::fg(1.0, 1.0), axis, 1e-9),
        profile_check("square_periodic_s1", ShapeSpec2D::periodic(1.0, 1.0), axis, 1e-9),
        profile_check("square_lame_p1", ShapeSpec2D::lame(1.0, 1.0), tilted, 1e-9),
        profile_check("square_oblique_s1", ShapeSpec2D::oblique(1.0, 1.0, 0.0), tilted, 1e-9),
        Check::at_most(
            "lines_periodic_r1",
            square_case_check(LimitFamily::Periodic, 1.0, 1000, SEED),
            1e-12,
        ),
        Check::at_most(
            "lines_periodic_r3",
            square_case_check(LimitFamily::Periodic, 3.0, 1000, SEED),
            1e-12,
        ),
        Check::at_most(
            "lines_oblique_r1",
            square_case_check(LimitFamily::Oblique, 1.0, 1000, SEED),
            1e-12,
        ),
    ]
}

/// Error ratios under frequency halving; quadratic convergence gives 4.
pub fn limit_convergence() -> Vec<Check> {
    let y = midpoint_y_grid(50);
    [(LimitFamily::Periodic, "periodic"), (LimitFamily::Oblique, "oblique")]
        .into_iter()
        .map(|(family, label)| {
            let name = format!("convergence_{label}");
            match limit_convergence_check(family, &y, &[0.2, 0.1, 0.05]) {
                Ok(rep) => {
                    let dev = rep.ratios.iter().map(|r| (r - 4.0).abs()).fold(0.0, f64::max);
                    let ratios: Vec<String> = rep.ratios.iter().map(|r| format!("{r:.4}")).collect();
                    Check::at_most(name, dev, 0.5).with_detail(format!("ratios={}", ratios.join(",")))
                }
                Err(e) => Check::failed(name, e),
            }
        })
        .collect()
}

/// Equivalent formulations of the same zero sets.
pub fn equivalences() -> Vec<Check> {
    let mut out = Vec::new();
    let (big_r, r) = (2.0, 0.5);
    for s in [0.0, 0.5, 1.0] {
        let name = format!("toroid_octic_s{s}");
        let root = |x: f64, y: f64, z: f64| eval_toroid(x, y, z, s, big_r, r);
        let octic = |x: f64, y: f64, z: f64| eval_toroid_octic(x, y, z, s, big_r, r);
        out.push(
            match zero_set_residual(&root, &octic, &toroid_probes(big_r, r, 1000, SEED)) {
                Ok(v) => Check::at_most(name, v, 1e-9 * big_r.powi(4)),
                Err(e) => Check::failed(name, e),
            },
        );
    }

    let oblique = |x: f64, y: f64, z: f64| eval_oblique3d(x, y, z, 1.0, PI, 1.0);
    let schwarz = |x: f64, y: f64, z: f64| -(x.cos() + y.cos() + z.cos());
    let points = random_points(10_000, [-2.0 * PI; 3], [2.0 * PI; 3], SEED);
    out.push(Check::at_most(
        "schwarz_field",
        field_difference(&oblique, &schwarz, &points),
        1e-12,
    ));
    out.push(match zero_set_residual(&oblique, &schwarz, &schwarz_probes(1000, SEED)) {
        Ok(v) => Check::at_most("schwarz_zeros", v, 1e-12),
        Err(e) => Check::failed("schwarz_zeros", e),
    });

    let mut sphube: f64 = 0.0;
    let mut periodic: f64 = 0.0;
    for p in random_points(10_000, [-3.0, -3.0, 0.0], [3.0, 3.0, 1.0], SEED) {
        let (x, y, s) = (p[0], p[1], p[2]);
        sphube = sphube.max((eval_sphube(x, y, 0.0, s, 1.0) - eval_fg(x, y, s, 1.0)).abs());
        if s > 0.0 {
            periodic = periodic.max((eval_periodic3d(x, y, 0.0, s, 1.0) - eval_periodic(x, y, s, 1.0)).abs());
        }
    }
    out.push(Check::at_most("restriction_sphube_fg", sphube, 0.0));
    out.push(Check::at_most("restriction_periodic3d", periodic, 0.0));
    out
}

/// Periods `4r/s` (periodic) and `2r/s` (oblique); the non-periodic
/// families must visibly fail the same probe.
pub fn periodicity() -> Vec<Check> {
    let (s, r) = (0.5, 1.0);
    let p4 = 4.0 * r / s;
    let p2 = 2.0 * r / s;
    let n = 1000;
    vec![
        Check::at_most(
            "period_periodic_2d",
            periodicity_check2d(&|x: f64, y: f64| eval_periodic(x, y, s, r), p4, n, SEED),
            1e-9,
        ),
        Check::at_most(
            "period_oblique_2d",
            periodicity_check2d(&|x: f64, y: f64| eval_oblique(x, y, s, r, 0.0), p2, n, SEED),
            1e-9,
        ),
        Check::at_most(
            "period_periodic_3d",
            periodicity_check3d(&|x: f64, y: f64, z: f64| eval_periodic3d(x, y, z, s, r), p4, n, SEED),
            1e-9,
        ),
        Check::at_most(
            "period_oblique_3d",
            periodicity_check3d(&|x: f64, y: f64, z: f64| eval_oblique3d(x, y, z, s, r, 0.0), p2, n, SEED),
            1e-9,
        ),
        Check::above(
            "aperiodic_fg",
            periodicity_check2d(&|x: f64, y: f64| eval_fg(x, y, s, r), p2, n, SEED),
            0.1,
        ),
        Check::above(
            "aperiodic_lame",
            periodicity_check2d(&|x: f64, y: f64| eval_lame(x, y, 4.0, r), p4, n, SEED),
            0.1,
        ),
    ]
}

/// Solids meshed at 96³ with their expected Euler characteristic.
pub fn mesh_cases() -> Vec<(&'static str, ShapeSpec3D, i64)> {
    vec![
        ("lame3d_p1", ShapeSpec3D::lame3d(1.0, 1.0), 2),
        ("lame3d_p2", ShapeSpec3D::lame3d(2.0, 1.0), 2),
        ("lame3d_p4", ShapeSpec3D::lame3d(4.0, 1.0), 2),
        ("lame3d_pinf", ShapeSpec3D::lame3d(f64::INFINITY, 1.0), 2),
        ("sphube_s0", ShapeSpec3D::sphube(0.0, 1.0), 2),
        ("sphube_s1", ShapeSpec3D::sphube(1.0, 1.0), 2),
        ("periodic3d_s0.5", ShapeSpec3D::periodic3d(0.5, 1.0), 2),
        ("periodic3d_s1", ShapeSpec3D::periodic3d(1.0, 1.0), 2),
        ("oblique3d_s0.5", ShapeSpec3D::oblique3d(0.5, 1.0, 0.0), 2),
        ("oblique3d_s1", ShapeSpec3D::oblique3d(1.0, 1.0, 0.0), 2),
        ("cone_fg", ShapeSpec3D::cone_fg(0.8, 3.0), 2),
        ("cone_lame", ShapeSpec3D::cone_lame(1.5, 1.0, 1.0, 2.0), 2),
        ("cuboctahedron", ShapeSpec3D::cuboctahedron(1.0, 2.0), 2),
        ("toroid_s0", ShapeSpec3D::toroid(0.0, 2.0, 0.5), 0),
        ("toroid_s1", ShapeSpec3D::toroid(1.0, 2.0, 0.5), 0),
    ]
}

pub fn mesh_topology(engine: &Engine) -> Vec<Check> {
    let mut out = Vec::new();
    for (label, spec, chi) in mesh_cases() {
        let name = format!("mesh_{label}");
        let field = match make_field3d(&spec) {
            Ok(f) => f,
            Err(e) => {
                out.push(Check::failed(name, e));
                continue;
            }
        };
        let mesh = match engine.polygonize(&field, &spec.default_domain(1, 96)) {
            Ok(m) => m,
            Err(e) => {
                out.push(Check::failed(name, e));
                continue;
            }
        };
        let st = mesh_stats(&mesh);
        // Zero exactly when the mesh is closed with the expected topology.
        let defect = (st.euler_characteristic - chi).unsigned_abs() as f64
            + st.boundary_edge_count as f64
            + if st.watertight { 0.0 } else { 1.0 };
        out.push(Check::at_most(name, defect, 0.0).with_detail(format!(
            "chi={} expected={chi} watertight={} V={} F={}",
            st.euler_characteristic, st.watertight, st.vertex_count, st.triangle_count
        )));
    }

    let sphere = ShapeSpec3D::lame3d(2.0, 1.0);
    let field = make_field3d(&sphere).expect("valid sphere");
    out.push(match engine.polygonize(&field, &sphere.default_domain(1, 64)) {
        Ok(mesh) => {
            let area = mesh_stats(&mesh).total_area;
            Check::at_most("sphere_area_64", (area - 4.0 * PI).abs() / (4.0 * PI), 0.01)
                .with_detail(format!("area={area:.6}"))
        }
        Err(e) => Check::failed("sphere_area_64", e),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_formatting() {
        let c = Check::at_most("x", 1e-13, 1e-12);
        assert!(c.passed());
        assert_eq!(c.to_string(), "x measured=1.000e-13 bound<=1.0e-12 PASS");
        let c = Check::above("y", 0.05, 0.1);
        assert_eq!(c.to_string(), "y measured=5.000e-2 bound>1.0e-1 FAIL");
        assert!(!Check::failed("z", "boom").passed());
    }
}
