//! Planar squircles as inside-negative scalar fields.
//!
//! | family            | zero set                                              |
//! |-------------------|-------------------------------------------------------|
//! | Lamé              | `\|x\|^p + \|y\|^p = r^p`                              |
//! | Fernandez-Guasti  | `x² + y² − (s²/r²)x²y² = r²`                          |
//! | periodic          | `cos(sπx/2r)·cos(sπy/2r) = cos(sπ/2)`                 |
//! | oblique           | `cos(sπx/r) + cos(sπy/r) = 1 + cos(sπ) − ⌊s⌋h`        |
//! | phase grid        | `sin(πx)·sin(πy) = 0`                                 |
//!
//! The Frantz squircle has no implicit form and is only available through
//! [`frantz_point`].

use core::f64::consts::PI;
use core::fmt;

use libm::{cos, floor, hypot, pow, sin, tanh};

use crate::contour::Domain2D;
use crate::error::ShapeError;
use crate::field::Field2;

/// Below this squareness the Frantz parametrisation is replaced by the circle.
pub const FRANTZ_CIRCLE_CUTOFF: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family2D {
    Lame,
    FernandezGuasti,
    Periodic,
    Oblique,
    Frantz,
    PhaseGrid,
}

impl Family2D {
    pub const ALL: [Family2D; 6] = [
        Family2D::Lame,
        Family2D::FernandezGuasti,
        Family2D::Periodic,
        Family2D::Oblique,
        Family2D::Frantz,
        Family2D::PhaseGrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family2D::Lame => "lame",
            Family2D::FernandezGuasti => "fg",
            Family2D::Periodic => "periodic",
            Family2D::Oblique => "oblique",
            Family2D::Frantz => "frantz",
            Family2D::PhaseGrid => "phase_grid",
        }
    }

    pub fn from_name(name: &str) -> Option<Family2D> {
        Family2D::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family tag plus parameters. Parameters a family does not use are ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeSpec2D {
    pub family: Family2D,
    /// Lamé exponent `p`, `f64::INFINITY` for the square.
    pub exponent: f64,
    /// Squareness `s`.
    pub squareness: f64,
    /// Scale `r`.
    pub radius: f64,
    /// Overshoot `h` (oblique only).
    pub overshoot: f64,
}

impl ShapeSpec2D {
    pub fn new(family: Family2D) -> Self {
        ShapeSpec2D {
            family,
            exponent: 2.0,
            squareness: 0.0,
            radius: 1.0,
            overshoot: 0.0,
        }
    }

    pub fn lame(exponent: f64, radius: f64) -> Self {
        ShapeSpec2D {
            exponent,
            radius,
            ..Self::new(Family2D::Lame)
        }
    }

    pub fn fg(squareness: f64, radius: f64) -> Self {
        ShapeSpec2D {
            squareness,
            radius,
            ..Self::new(Family2D::FernandezGuasti)
        }
    }

    pub fn periodic(squareness: f64, radius: f64) -> Self {
        ShapeSpec2D {
            squareness,
            radius,
            ..Self::new(Family2D::Periodic)
        }
    }

    pub fn oblique(squareness: f64, radius: f64, overshoot: f64) -> Self {
        ShapeSpec2D {
            squareness,
            radius,
            overshoot,
            ..Self::new(Family2D::Oblique)
        }
    }

    pub fn frantz(squareness: f64, radius: f64) -> Self {
        ShapeSpec2D {
            squareness,
            radius,
            ..Self::new(Family2D::Frantz)
        }
    }

    pub fn phase_grid() -> Self {
        Self::new(Family2D::PhaseGrid)
    }

    /// Checks the parameters the family actually reads.
    pub fn validate(&self) -> Result<(), ShapeError> {
        let r = self.radius;
        let s = self.squareness;
        if self.family != Family2D::PhaseGrid {
            ShapeError::check("radius", r, "(0, inf)", r > 0.0 && r.is_finite())?;
        }
        match self.family {
            Family2D::Lame => {
                ShapeError::check("exponent", self.exponent, "[1, inf]", self.exponent >= 1.0)
            }
            Family2D::FernandezGuasti | Family2D::Periodic => {
                ShapeError::check("squareness", s, "[0, 1]", (0.0..=1.0).contains(&s))
            }
            Family2D::Oblique => {
                ShapeError::check("squareness", s, "[0, 1]", (0.0..=1.0).contains(&s))?;
                ShapeError::check(
                    "overshoot",
                    self.overshoot,
                    "[0, 2]",
                    (0.0..=2.0).contains(&self.overshoot),
                )
            }
            Family2D::Frantz => {
                ShapeError::check("squareness", s, "[0, inf)", s >= 0.0 && s.is_finite())
            }
            Family2D::PhaseGrid => Ok(()),
        }
    }

    /// Square window of half-width `1.2 r` around the origin, enlarged by `tiles`.
    pub fn default_domain(&self, tiles: u32, cells: usize) -> Domain2D {
        let scale = match self.family {
            Family2D::PhaseGrid => 1.0,
            _ => self.radius,
        };
        let half = 1.2 * scale * f64::from(tiles.max(1));
        Domain2D::new(-half, half, -half, half, cells, cells)
    }
}

impl fmt::Display for ShapeSpec2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family2D::Lame => write!(f, "lame p={} r={}", self.exponent, self.radius),
            Family2D::FernandezGuasti | Family2D::Periodic | Family2D::Frantz => {
                write!(f, "{} s={} r={}", self.family, self.squareness, self.radius)
            }
            Family2D::Oblique => write!(
                f,
                "oblique s={} r={} h={}",
                self.squareness, self.radius, self.overshoot
            ),
            Family2D::PhaseGrid => f.write_str("phase_grid"),
        }
    }
}

/// Normalised Lamé field `‖(x, y)‖_p − r`.
///
/// The p-norm form has the same zero set as `|x|^p + |y|^p = r^p` but does
/// not overflow for large `p`. `p = ∞` gives the Chebyshev norm.
pub fn eval_lame(x: f64, y: f64, p: f64, r: f64) -> f64 {
    let (ax, ay) = (x.abs(), y.abs());
    if p == 1.0 {
        return ax + ay - r;
    }
    if p == 2.0 {
        return hypot(ax, ay) - r;
    }
    let m = if ax >= ay { ax } else { ay };
    if p == f64::INFINITY || m == 0.0 {
        return m - r;
    }
    m * pow(pow(ax / m, p) + pow(ay / m, p), 1.0 / p) - r
}

/// Fernandez-Guasti quartic `x² + y² − (s²/r²)x²y² − r²`.
pub fn eval_fg(x: f64, y: f64, s: f64, r: f64) -> f64 {
    let (x2, y2) = (x * x, y * y);
    let k = s * s / (r * r);
    (x2 + y2) - k * (x2 * y2) - r * r
}

/// Periodic squircle `cos(sπ/2) − cos(sπx/2r)·cos(sπy/2r)`, for `0 < s ≤ 1`.
pub fn eval_periodic(x: f64, y: f64, s: f64, r: f64) -> f64 {
    let a = s * PI / (2.0 * r);
    cos(s * PI / 2.0) - cos(a * x) * cos(a * y)
}

/// Oblique squircle with overshoot,
/// `1 + cos(sπ) − ⌊s⌋h − cos(sπx/r) − cos(sπy/r)`, for `0 < s ≤ 1`.
pub fn eval_oblique(x: f64, y: f64, s: f64, r: f64, h: f64) -> f64 {
    let a = s * PI / r;
    1.0 + cos(s * PI) - floor(s) * h - cos(a * x) - cos(a * y)
}

/// `sin(πx)·sin(πy)`: lines through every integer lattice point.
pub fn eval_phase_grid(x: f64, y: f64) -> f64 {
    sin(PI * x) * sin(PI * y)
}

/// Frantz squircle point at parameter `t`.
///
/// Squareness at or below [`FRANTZ_CIRCLE_CUTOFF`] returns the circle point.
pub fn frantz_point(t: f64, s: f64, r: f64) -> (f64, f64) {
    if s <= FRANTZ_CIRCLE_CUTOFF {
        return (r * cos(t), r * sin(t));
    }
    let d = tanh(s);
    (r * tanh(s * cos(t)) / d, r * tanh(s * sin(t)) / d)
}

/// Validated implicit curve, ready to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveField {
    Circle { r: f64 },
    Lame { p: f64, r: f64 },
    FernandezGuasti { s: f64, r: f64 },
    Periodic { s: f64, r: f64 },
    Oblique { s: f64, r: f64, h: f64 },
    PhaseGrid,
}

impl Field2 for CurveField {
    #[inline]
    fn eval(&self, x: f64, y: f64) -> f64 {
        match *self {
            CurveField::Circle { r } => (x * x + y * y) - r * r,
            CurveField::Lame { p, r } => eval_lame(x, y, p, r),
            CurveField::FernandezGuasti { s, r } => eval_fg(x, y, s, r),
            CurveField::Periodic { s, r } => eval_periodic(x, y, s, r),
            CurveField::Oblique { s, r, h } => eval_oblique(x, y, s, r, h),
            CurveField::PhaseGrid => eval_phase_grid(x, y),
        }
    }
}

/// Builds the inside-negative field for `spec`.
///
/// The cosine families degenerate to `0 = 0` at `s = 0`; that case maps to
/// the circle of radius `r`, which is their limit as `s → 0`.
pub fn make_field2d(spec: &ShapeSpec2D) -> Result<CurveField, ShapeError> {
    spec.validate()?;
    let (s, r) = (spec.squareness, spec.radius);
    Ok(match spec.family {
        Family2D::Frantz => return Err(ShapeError::ParametricOnly { family: "frantz" }),
        Family2D::Lame => CurveField::Lame {
            p: spec.exponent,
            r,
        },
        Family2D::FernandezGuasti => CurveField::FernandezGuasti { s, r },
        Family2D::Periodic if s == 0.0 => CurveField::Circle { r },
        Family2D::Periodic => CurveField::Periodic { s, r },
        Family2D::Oblique if s == 0.0 => CurveField::Circle { r },
        Family2D::Oblique => CurveField::Oblique {
            s,
            r,
            h: spec.overshoot,
        },
        Family2D::PhaseGrid => CurveField::PhaseGrid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
    use proptest::prelude::*;

    const EPS: f64 = 1e-12;

    #[test]
    fn lame_examples() {
        assert!(eval_lame(1.0, 0.0, 2.0, 1.0).abs() < EPS);
        assert!(eval_lame(1.0, 1.0, f64::INFINITY, 1.0).abs() < EPS);
        assert!(eval_lame(0.5, 0.5, 1.0, 1.0).abs() < EPS);
    }

    #[test]
    fn lame_large_exponent_approaches_square() {
        let v = eval_lame(1.0, 1.0, 1e6, 1.0);
        assert!(v.is_finite());
        assert!(v > 0.0 && v < 1e-5);
        assert!(eval_lame(3.0, 4.0, 2.0, 5.0).abs() < EPS);
        assert!(eval_lame(0.0, 0.0, 7.5, 2.0) == -2.0);
    }

    #[test]
    fn fg_examples() {
        assert!(eval_fg(1.0, 1.0, 1.0, 1.0).abs() < EPS);
        assert!(eval_fg(1.0, 0.0, 0.7, 1.0).abs() < EPS);
        assert!((eval_fg(0.5, 0.5, 0.0, 1.0) + 0.5).abs() < EPS);
    }

    #[test]
    fn periodic_examples() {
        assert!(eval_periodic(1.0, 1.0, 1.0, 1.0).abs() < EPS);
        assert!(eval_periodic(1.0, 0.0, 0.5, 1.0).abs() < EPS);
        assert!((eval_periodic(0.0, 0.0, 0.5, 1.0) - (FRAC_1_SQRT_2 - 1.0)).abs() < EPS);
    }

    #[test]
    fn oblique_examples() {
        assert!(eval_oblique(1.0, 0.0, 0.6, 1.0, 0.0).abs() < EPS);
        assert!(eval_oblique(0.3, 0.7, 1.0, 1.0, 0.0).abs() < EPS);
        assert!((eval_oblique(0.0, 0.0, 1.0, 1.0, 2.0) + 4.0).abs() < EPS);
    }

    #[test]
    fn overshoot_only_acts_at_full_squareness() {
        for &(x, y) in &[(0.2, 0.1), (0.9, -0.4)] {
            assert_eq!(
                eval_oblique(x, y, 0.7, 1.0, 1.5),
                eval_oblique(x, y, 0.7, 1.0, 0.0)
            );
        }
    }

    #[test]
    fn phase_grid_examples() {
        assert!(eval_phase_grid(0.0, 0.5).abs() < EPS);
        assert!((eval_phase_grid(0.5, 0.5) - 1.0).abs() < EPS);
        assert!(eval_phase_grid(1.5, 3.0).abs() < EPS);
    }

    #[test]
    fn frantz_examples() {
        let (x, y) = frantz_point(0.0, 2.0, 1.0);
        assert!((x - 1.0).abs() < EPS && y.abs() < EPS);
        let (x, y) = frantz_point(PI / 2.0, 2.0, 1.0);
        assert!(x.abs() < EPS && (y - 1.0).abs() < EPS);
        // tanh(√2)/tanh(2) evaluated with 50-digit arithmetic.
        let expected = 0.921_535_420_714_615_4;
        let (x, y) = frantz_point(PI / 4.0, 2.0, 1.0);
        assert!((x - expected).abs() < 1e-13, "{x}");
        assert!((y - expected).abs() < 1e-13, "{y}");
    }

    #[test]
    fn frantz_small_squareness_is_circle() {
        let (x, y) = frantz_point(1.0, 0.0, 2.0);
        assert_eq!((x, y), (2.0 * cos(1.0), 2.0 * sin(1.0)));
        let mut worst: f64 = 0.0;
        for k in 0..3600 {
            let t = 2.0 * PI * k as f64 / 3600.0;
            let (x, y) = frantz_point(t, 1e-3, 1.0);
            worst = worst.max(hypot(x - cos(t), y - sin(t)));
        }
        assert!(worst <= 1e-6, "{worst}");
    }

    #[test]
    fn make_field_examples() {
        let f = make_field2d(&ShapeSpec2D::fg(0.0, 1.0)).unwrap();
        for &(x, y) in &[(0.0, 0.0), (0.3, 0.9), (-2.0, 1.5)] {
            assert_eq!(f.eval(x, y), x * x + y * y - 1.0);
        }
        let f = make_field2d(&ShapeSpec2D::periodic(0.0, 2.0)).unwrap();
        for &(x, y) in &[(0.0, 0.0), (0.3, 0.9), (-2.0, 1.5)] {
            assert_eq!(f.eval(x, y), x * x + y * y - 4.0);
        }
        assert_eq!(
            make_field2d(&ShapeSpec2D::frantz(1.0, 1.0)),
            Err(ShapeError::ParametricOnly { family: "frantz" })
        );
    }

    #[test]
    fn make_field_rejects_bad_parameters() {
        let bad = [
            ShapeSpec2D::fg(1.5, 1.0),
            ShapeSpec2D::fg(-0.1, 1.0),
            ShapeSpec2D::periodic(0.5, 0.0),
            ShapeSpec2D::periodic(f64::NAN, 1.0),
            ShapeSpec2D::lame(0.5, 1.0),
            ShapeSpec2D::oblique(1.0, 1.0, 2.5),
            ShapeSpec2D::oblique(1.0, -1.0, 0.0),
        ];
        for spec in bad {
            assert!(
                matches!(make_field2d(&spec), Err(ShapeError::OutOfRange { .. })),
                "{spec:?}"
            );
        }
        assert!(make_field2d(&ShapeSpec2D::lame(f64::INFINITY, 1.0)).is_ok());
        assert!(make_field2d(&ShapeSpec2D::phase_grid()).is_ok());
    }

    #[test]
    fn oblique_zero_squareness_is_circle() {
        let f = make_field2d(&ShapeSpec2D::oblique(0.0, 1.5, 0.0)).unwrap();
        assert_eq!(f, CurveField::Circle { r: 1.5 });
    }

    fn closed_families() -> std::vec::Vec<CurveField> {
        let mut out = std::vec::Vec::new();
        for &p in &[1.0, 1.5, 2.0, 3.0, 8.0, f64::INFINITY] {
            out.push(make_field2d(&ShapeSpec2D::lame(p, 1.3)).unwrap());
        }
        for &s in &[0.0, 0.3, 0.7, 1.0] {
            out.push(make_field2d(&ShapeSpec2D::fg(s, 1.3)).unwrap());
            out.push(make_field2d(&ShapeSpec2D::periodic(s, 1.3)).unwrap());
            out.push(make_field2d(&ShapeSpec2D::oblique(s, 1.3, 0.0)).unwrap());
        }
        out
    }

    #[test]
    fn boundary_anchors_and_inside_negative() {
        for f in closed_families() {
            assert!(f.eval(1.3, 0.0).abs() <= EPS, "{f:?}");
            assert!(f.eval(0.0, 1.3).abs() <= EPS, "{f:?}");
            assert!(f.eval(-1.3, 0.0).abs() <= EPS, "{f:?}");
            assert!(f.eval(0.0, 0.0) < 0.0, "{f:?}");
        }
    }

    #[test]
    fn square_corners() {
        // Axis-aligned squares of side 2r, tilted squares of side r√2.
        let r = 1.3;
        for f in [
            CurveField::Lame { p: f64::INFINITY, r },
            CurveField::FernandezGuasti { s: 1.0, r },
            CurveField::Periodic { s: 1.0, r },
        ] {
            assert!(f.eval(r, r).abs() <= EPS, "{f:?}");
            assert!(f.eval(r, -0.4 * r).abs() <= EPS, "{f:?}");
        }
        for f in [
            CurveField::Lame { p: 1.0, r },
            CurveField::Oblique { s: 1.0, r, h: 0.0 },
        ] {
            assert!(f.eval(r / 2.0, r / 2.0).abs() <= EPS, "{f:?}");
            let edge = hypot(r, r);
            assert!((edge - r * SQRT_2).abs() <= EPS);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn dihedral_symmetry(x in -3.0f64..3.0, y in -3.0f64..3.0, idx in 0usize..64) {
            let fields = closed_families();
            let f = fields[idx % fields.len()];
            let v = f.eval(x, y);
            prop_assert!((f.eval(-x, y) - v).abs() <= EPS);
            prop_assert!((f.eval(x, -y) - v).abs() <= EPS);
            prop_assert!((f.eval(y, x) - v).abs() <= EPS);
        }
    }
}
