//! Squircular implicit surfaces.
//!
//! The raw `eval_*` functions evaluate each printed equation, recast as an
//! inside-negative field. [`make_field3d`] turns a [`ShapeSpec3D`] into a
//! closed solid: families whose equation carries extra sheets (the sphube and
//! the cosine families at full squareness, the squircular toroid, the cones
//! and the cuboctahedron) are intersected with the bounding region of their
//! central component so the solid can be meshed watertight.

use core::f64::consts::PI;
use core::fmt;

use libm::{cos, floor, hypot, pow, sqrt};

use crate::error::ShapeError;
use crate::field::{max, Field3};
use crate::polygonize::Domain3D;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family3D {
    Lame3D,
    Sphube,
    Periodic3D,
    Oblique3D,
    Toroid,
    ToroidOctic,
    ConeFg,
    ConeLame,
    Cuboctahedron,
}

impl Family3D {
    pub const ALL: [Family3D; 9] = [
        Family3D::Lame3D,
        Family3D::Sphube,
        Family3D::Periodic3D,
        Family3D::Oblique3D,
        Family3D::Toroid,
        Family3D::ToroidOctic,
        Family3D::ConeFg,
        Family3D::ConeLame,
        Family3D::Cuboctahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family3D::Lame3D => "lame3d",
            Family3D::Sphube => "sphube",
            Family3D::Periodic3D => "periodic3d",
            Family3D::Oblique3D => "oblique3d",
            Family3D::Toroid => "toroid",
            Family3D::ToroidOctic => "toroid_octic",
            Family3D::ConeFg => "cone_fg",
            Family3D::ConeLame => "cone_lame",
            Family3D::Cuboctahedron => "cuboctahedron",
        }
    }

    pub fn from_name(name: &str) -> Option<Family3D> {
        Family3D::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family3D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family tag plus parameters. Parameters a family does not use are ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeSpec3D {
    pub family: Family3D,
    /// Lamé exponent `p` (`lame3d`, `cone_lame`).
    pub exponent: f64,
    /// Squareness `s`.
    pub squareness: f64,
    /// Scale `r`; tube radius for the toroids.
    pub radius: f64,
    /// Overshoot `h` (`oblique3d` only).
    pub overshoot: f64,
    /// Toroid distance `R` from the tube center to the hole center.
    pub major_radius: f64,
    /// Cone base semi-axes `a`, `b`.
    pub semi_a: f64,
    pub semi_b: f64,
    /// Cone height `c`.
    pub height: f64,
    /// Cuboctahedron scale `k`.
    pub scale: f64,
    /// Cuboctahedron cross-term constant (2 in the unscaled equation).
    pub cross_term: f64,
    /// Keep the periodic extension instead of clipping to the central cell.
    pub tiled: bool,
}

/// Recommended range for [`ShapeSpec3D::cross_term`]; outside it the surface
/// is a poor cuboctahedron but still well defined.
pub const CROSS_TERM_RANGE: (f64, f64) = (1.5, 4.0);

impl ShapeSpec3D {
    pub fn new(family: Family3D) -> Self {
        ShapeSpec3D {
            family,
            exponent: 2.0,
            squareness: 0.0,
            radius: 1.0,
            overshoot: 0.0,
            major_radius: 2.0,
            semi_a: 1.0,
            semi_b: 1.0,
            height: 1.0,
            scale: 1.0,
            cross_term: 2.0,
            tiled: false,
        }
    }

    pub fn lame3d(exponent: f64, radius: f64) -> Self {
        ShapeSpec3D {
            exponent,
            radius,
            ..Self::new(Family3D::Lame3D)
        }
    }

    pub fn sphube(squareness: f64, radius: f64) -> Self {
        ShapeSpec3D {
            squareness,
            radius,
            ..Self::new(Family3D::Sphube)
        }
    }

    pub fn periodic3d(squareness: f64, radius: f64) -> Self {
        ShapeSpec3D {
            squareness,
            radius,
            ..Self::new(Family3D::Periodic3D)
        }
    }

    pub fn oblique3d(squareness: f64, radius: f64, overshoot: f64) -> Self {
        ShapeSpec3D {
            squareness,
            radius,
            overshoot,
            ..Self::new(Family3D::Oblique3D)
        }
    }

    pub fn toroid(squareness: f64, major_radius: f64, tube: f64) -> Self {
        ShapeSpec3D {
            squareness,
            major_radius,
            radius: tube,
            ..Self::new(Family3D::Toroid)
        }
    }

    pub fn toroid_octic(squareness: f64, major_radius: f64, tube: f64) -> Self {
        ShapeSpec3D {
            family: Family3D::ToroidOctic,
            ..Self::toroid(squareness, major_radius, tube)
        }
    }

    pub fn cone_fg(squareness: f64, height: f64) -> Self {
        ShapeSpec3D {
            squareness,
            height,
            ..Self::new(Family3D::ConeFg)
        }
    }

    pub fn cone_lame(exponent: f64, semi_a: f64, semi_b: f64, height: f64) -> Self {
        ShapeSpec3D {
            exponent,
            semi_a,
            semi_b,
            height,
            ..Self::new(Family3D::ConeLame)
        }
    }

    pub fn cuboctahedron(scale: f64, cross_term: f64) -> Self {
        ShapeSpec3D {
            scale,
            cross_term,
            ..Self::new(Family3D::Cuboctahedron)
        }
    }

    pub fn with_tiling(self, tiled: bool) -> Self {
        ShapeSpec3D { tiled, ..self }
    }

    /// Checks the parameters the family actually reads.
    pub fn validate(&self) -> Result<(), ShapeError> {
        let positive = |name, v: f64| ShapeError::check(name, v, "(0, inf)", v > 0.0 && v.is_finite());
        let unit = |v: f64| ShapeError::check("squareness", v, "[0, 1]", (0.0..=1.0).contains(&v));
        match self.family {
            Family3D::Lame3D => {
                positive("radius", self.radius)?;
                ShapeError::check("exponent", self.exponent, "[1, inf]", self.exponent >= 1.0)
            }
            Family3D::Sphube | Family3D::Periodic3D => {
                positive("radius", self.radius)?;
                unit(self.squareness)
            }
            Family3D::Oblique3D => {
                positive("radius", self.radius)?;
                unit(self.squareness)?;
                ShapeError::check(
                    "overshoot",
                    self.overshoot,
                    "[0, 4]",
                    (0.0..=4.0).contains(&self.overshoot),
                )
            }
            Family3D::Toroid | Family3D::ToroidOctic => {
                positive("radius", self.radius)?;
                unit(self.squareness)?;
                ShapeError::check(
                    "major_radius",
                    self.major_radius,
                    "(r, inf)",
                    self.major_radius > self.radius && self.major_radius.is_finite(),
                )
            }
            Family3D::ConeFg => {
                positive("height", self.height)?;
                unit(self.squareness)
            }
            Family3D::ConeLame => {
                positive("height", self.height)?;
                positive("semi_a", self.semi_a)?;
                positive("semi_b", self.semi_b)?;
                ShapeError::check(
                    "exponent",
                    self.exponent,
                    "[1, 2]",
                    (1.0..=2.0).contains(&self.exponent),
                )
            }
            Family3D::Cuboctahedron => {
                positive("scale", self.scale)?;
                positive("cross_term", self.cross_term)
            }
        }
    }

    /// `Some(message)` when the parameters are valid but outside the range
    /// that gives a recognisable shape.
    pub fn warning(&self) -> Option<&'static str> {
        let (lo, hi) = CROSS_TERM_RANGE;
        if self.family == Family3D::Cuboctahedron && !(lo..=hi).contains(&self.cross_term) {
            Some("cross_term outside [1.5, 4] gives a poor cuboctahedron approximation")
        } else {
            None
        }
    }

    /// Axis-aligned window around the shape, enlarged by `tiles` for the
    /// periodic families.
    pub fn default_domain(&self, tiles: u32, cells: usize) -> Domain3D {
        let t = f64::from(tiles.max(1));
        let cube = |half: f64| Domain3D::cube(half, cells);
        match self.family {
            Family3D::Lame3D | Family3D::Sphube => cube(1.2 * self.radius),
            // One period of the overshoot surfaces is the cell [-r, r]³.
            Family3D::Oblique3D if self.overshoot > 0.0 && self.squareness >= 1.0 => {
                cube(self.radius * t)
            }
            Family3D::Periodic3D | Family3D::Oblique3D => cube(1.2 * self.radius * t),
            Family3D::Toroid | Family3D::ToroidOctic => {
                let xy = 1.1 * (self.major_radius + self.radius);
                let z = 1.2 * self.radius;
                Domain3D::new([-xy, -xy, -z], [xy, xy, z], [cells, cells, cells])
            }
            Family3D::ConeFg | Family3D::ConeLame => {
                let (a, b) = match self.family {
                    Family3D::ConeFg => (1.0, 1.0),
                    _ => (self.semi_a, self.semi_b),
                };
                let c = self.height;
                Domain3D::new(
                    [-1.2 * a, -1.2 * b, -0.1 * c],
                    [1.2 * a, 1.2 * b, 1.1 * c],
                    [cells, cells, cells],
                )
            }
            Family3D::Cuboctahedron => cube(1.2 * self.scale),
        }
    }
}

impl fmt::Display for ShapeSpec3D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family3D::Lame3D => write!(f, "lame3d p={} r={}", self.exponent, self.radius),
            Family3D::Sphube | Family3D::Periodic3D => {
                write!(f, "{} s={} r={}", self.family, self.squareness, self.radius)
            }
            Family3D::Oblique3D => write!(
                f,
                "oblique3d s={} r={} h={}",
                self.squareness, self.radius, self.overshoot
            ),
            Family3D::Toroid | Family3D::ToroidOctic => write!(
                f,
                "{} s={} R={} r={}",
                self.family, self.squareness, self.major_radius, self.radius
            ),
            Family3D::ConeFg => write!(f, "cone_fg s={} c={}", self.squareness, self.height),
            Family3D::ConeLame => write!(
                f,
                "cone_lame p={} a={} b={} c={}",
                self.exponent, self.semi_a, self.semi_b, self.height
            ),
            Family3D::Cuboctahedron => {
                write!(f, "cuboctahedron k={} c={}", self.scale, self.cross_term)
            }
        }?;
        if self.tiled {
            f.write_str(" tiled")?;
        }
        Ok(())
    }
}

/// Normalised Lamé surface `‖(x, y, z)‖_p − r`; `p = ∞` gives the cube.
pub fn eval_lame3d(x: f64, y: f64, z: f64, p: f64, r: f64) -> f64 {
    let (ax, ay, az) = (x.abs(), y.abs(), z.abs());
    if p == 1.0 {
        return ax + ay + az - r;
    }
    if p == 2.0 {
        return sqrt(x * x + y * y + z * z) - r;
    }
    let m = max(max(ax, ay), az);
    if p == f64::INFINITY || m == 0.0 {
        return m - r;
    }
    m * pow(pow(ax / m, p) + pow(ay / m, p) + pow(az / m, p), 1.0 / p) - r
}

/// Sphube `x²+y²+z² − (s²/r²)(x²y²+y²z²+x²z²) + (s⁴/r⁴)x²y²z² − r²`.
///
/// At `z = 0` this reduces bit-for-bit to [`crate::fields2d::eval_fg`].
pub fn eval_sphube(x: f64, y: f64, z: f64, s: f64, r: f64) -> f64 {
    let (x2, y2, z2) = (x * x, y * y, z * z);
    let k = s * s / (r * r);
    (x2 + y2 + z2) - k * (x2 * y2 + y2 * z2 + x2 * z2) + k * k * (x2 * y2 * z2) - r * r
}

/// `cos(sπ/2) − cos(sπx/2r)·cos(sπy/2r)·cos(sπz/2r)`, for `0 < s ≤ 1`.
pub fn eval_periodic3d(x: f64, y: f64, z: f64, s: f64, r: f64) -> f64 {
    let a = s * PI / (2.0 * r);
    cos(s * PI / 2.0) - cos(a * x) * cos(a * y) * cos(a * z)
}

/// `2 + cos(sπ) − ⌊s⌋h − Σ cos(sπxᵢ/r)`, for `0 < s ≤ 1`.
///
/// With `s = 1, r = π, h = 1` this is `−(cos x + cos y + cos z)`.
pub fn eval_oblique3d(x: f64, y: f64, z: f64, s: f64, r: f64, h: f64) -> f64 {
    let a = s * PI / r;
    2.0 + cos(s * PI) - floor(s) * h - cos(a * x) - cos(a * y) - cos(a * z)
}

/// Squircular toroid, square-root form.
///
/// With `q = √(x²+y²)`: `(q−R)² + z² − (s²z²/r²)(q−R)² − r²`. The tube cross
/// section is the Fernandez-Guasti squircle of squareness `s` and radius `r`.
pub fn eval_toroid(x: f64, y: f64, z: f64, s: f64, big_r: f64, r: f64) -> f64 {
    let u = hypot(x, y) - big_r;
    let u2 = u * u;
    let z2 = z * z;
    u2 + z2 - (s * s * z2 / (r * r)) * u2 - r * r
}

/// Squircular toroid, octic form obtained by squaring away the root.
pub fn eval_toroid_octic(x: f64, y: f64, z: f64, s: f64, big_r: f64, r: f64) -> f64 {
    let rho2 = x * x + y * y;
    let z2 = z * z;
    let big_r2 = big_r * big_r;
    let w = s * s * z2 / (r * r);
    let lhs = rho2 + z2 + big_r2 - r * r - w * (rho2 + big_r2);
    let k = 1.0 - w;
    lhs * lhs - 4.0 * big_r2 * rho2 * k * k
}

/// The raw quartic `x²z² + y²z² − s²c²x²y² − z⁴/c²` of the Fernandez-Guasti cone.
pub fn cone_fg_quartic(x: f64, y: f64, z: f64, s: f64, c: f64) -> f64 {
    let (x2, y2, z2) = (x * x, y * y, z * z);
    x2 * z2 + y2 * z2 - s * s * c * c * x2 * y2 - z2 * z2 / (c * c)
}

/// Fernandez-Guasti cone: the quartic clipped to `0 ≤ z ≤ c` and
/// `|x|, |y| ≤ z/c`, closed by a flat base at `z = c`.
pub fn eval_cone_fg(x: f64, y: f64, z: f64, s: f64, c: f64) -> f64 {
    let slab = z / c;
    let bounds = max(max(-z, z - c), max(x.abs() - slab, y.abs() - slab));
    max(cone_fg_quartic(x, y, z, s, c), bounds)
}

/// Lamé cone `‖(x/a, y/b)‖_p − z/c` clipped to `0 ≤ z ≤ c`.
pub fn eval_cone_lame(x: f64, y: f64, z: f64, p: f64, a: f64, b: f64, c: f64) -> f64 {
    let side = crate::fields2d::eval_lame(x / a, y / b, p, 0.0) - z / c;
    max(side, max(-z, z - c))
}

/// Sham cuboctahedron
/// `(x²+y²+z²)/k² − (x²y²+y²z²+x²z²)/k⁴ + cc·x²y²z²/k⁶ − 1`
/// clipped to the box `|x|, |y|, |z| ≤ k`.
pub fn eval_sham_cuboctahedron(x: f64, y: f64, z: f64, k: f64, cc: f64) -> f64 {
    let (x2, y2, z2) = (x * x / (k * k), y * y / (k * k), z * z / (k * k));
    let sextic = (x2 + y2 + z2) - (x2 * y2 + y2 * z2 + x2 * z2) + cc * (x2 * y2 * z2) - 1.0;
    max(sextic, box_field(x, y, z, k))
}

#[inline]
fn box_field(x: f64, y: f64, z: f64, half: f64) -> f64 {
    max(max(x.abs(), y.abs()), z.abs()) - half
}

/// Validated surface, ready to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfaceField {
    Sphere { r: f64 },
    Lame { p: f64, r: f64 },
    Sphube { s: f64, r: f64 },
    Periodic { s: f64, r: f64, clip: bool },
    Oblique { s: f64, r: f64, h: f64, clip: bool },
    Toroid { s: f64, big_r: f64, r: f64 },
    ToroidOctic { s: f64, big_r: f64, r: f64 },
    ConeFg { s: f64, c: f64 },
    ConeLame { p: f64, a: f64, b: f64, c: f64 },
    Cuboctahedron { k: f64, cc: f64 },
}

impl Field3 for SurfaceField {
    fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        match *self {
            SurfaceField::Sphere { r } => (x * x + y * y + z * z) - r * r,
            SurfaceField::Lame { p, r } => eval_lame3d(x, y, z, p, r),
            SurfaceField::Sphube { s, r } => max(eval_sphube(x, y, z, s, r), box_field(x, y, z, r)),
            SurfaceField::Periodic { s, r, clip } => {
                let v = eval_periodic3d(x, y, z, s, r);
                if clip {
                    max(v, box_field(x, y, z, r))
                } else {
                    v
                }
            }
            SurfaceField::Oblique { s, r, h, clip } => {
                let v = eval_oblique3d(x, y, z, s, r, h);
                if clip {
                    max(v, box_field(x, y, z, r))
                } else {
                    v
                }
            }
            SurfaceField::Toroid { s, big_r, r } => {
                max(eval_toroid(x, y, z, s, big_r, r), tube_band(x, y, z, big_r, r))
            }
            SurfaceField::ToroidOctic { s, big_r, r } => {
                max(eval_toroid_octic(x, y, z, s, big_r, r), tube_band(x, y, z, big_r, r))
            }
            SurfaceField::ConeFg { s, c } => eval_cone_fg(x, y, z, s, c),
            SurfaceField::ConeLame { p, a, b, c } => eval_cone_lame(x, y, z, p, a, b, c),
            SurfaceField::Cuboctahedron { k, cc } => eval_sham_cuboctahedron(x, y, z, k, cc),
        }
    }
}

// Square-section tube |q − R| ≤ r, |z| ≤ r that contains every squircular
// cross section and excludes the extra sheets of the toroid equations.
#[inline]
fn tube_band(x: f64, y: f64, z: f64, big_r: f64, r: f64) -> f64 {
    max((hypot(x, y) - big_r).abs(), z.abs()) - r
}

/// Builds the closed-solid field for `spec`.
///
/// The cosine families degenerate at `s = 0` and map to the sphere of radius
/// `r`. Unless `spec.tiled` is set, the sphube and the cosine families
/// without overshoot are clipped to the cube `[-r, r]³`, which contains
/// their central component.
pub fn make_field3d(spec: &ShapeSpec3D) -> Result<SurfaceField, ShapeError> {
    spec.validate()?;
    let (s, r) = (spec.squareness, spec.radius);
    Ok(match spec.family {
        Family3D::Lame3D => SurfaceField::Lame {
            p: spec.exponent,
            r,
        },
        Family3D::Sphube => SurfaceField::Sphube { s, r },
        Family3D::Periodic3D if s == 0.0 => SurfaceField::Sphere { r },
        Family3D::Periodic3D => SurfaceField::Periodic {
            s,
            r,
            clip: !spec.tiled,
        },
        Family3D::Oblique3D if s == 0.0 => SurfaceField::Sphere { r },
        Family3D::Oblique3D => {
            let h = spec.overshoot;
            let shifted = h > 0.0 && s >= 1.0;
            SurfaceField::Oblique {
                s,
                r,
                h,
                clip: !spec.tiled && !shifted,
            }
        }
        Family3D::Toroid => SurfaceField::Toroid {
            s,
            big_r: spec.major_radius,
            r,
        },
        Family3D::ToroidOctic => SurfaceField::ToroidOctic {
            s,
            big_r: spec.major_radius,
            r,
        },
        Family3D::ConeFg => SurfaceField::ConeFg { s, c: spec.height },
        Family3D::ConeLame => SurfaceField::ConeLame {
            p: spec.exponent,
            a: spec.semi_a,
            b: spec.semi_b,
            c: spec.height,
        },
        Family3D::Cuboctahedron => SurfaceField::Cuboctahedron {
            k: spec.scale,
            cc: spec.cross_term,
        },
    })
}
