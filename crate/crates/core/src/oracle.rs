//! Numerical checks of the shape families against closed-form expectations.
//!
//! Nothing here feeds back into the fields or the extractors; these are the
//! independent measurements the test-suite and `squircle verify` report.

use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::{acos, cos, fabs, sin, sqrt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::OracleError;
use crate::field::{Field2, Field3};
use crate::fields2d::{eval_oblique, eval_periodic};

/// Samples taken along a ray before bisecting the first sign change.
pub const RAY_SCAN_STEPS: usize = 2048;

/// Width of the final bisection bracket.
pub const BISECTION_TOLERANCE: f64 = 1e-13;

/// Distance along `origin + t·dir`, `t ∈ [0, t_max]`, of the first crossing
/// from negative to strictly positive.
///
/// The ray is scanned in [`RAY_SCAN_STEPS`] steps for the first positive
/// sample; the bracket is then bisected. A sign change narrower than one
/// scan step can be missed.
fn ray_root(f: impl Fn(f64) -> f64, t_max: f64) -> Result<f64, OracleError> {
    let inner = f(0.0);
    if !(inner < 0.0) {
        return Err(OracleError::NoSignChange {
            inner,
            outer: f(t_max),
        });
    }
    let step = t_max / RAY_SCAN_STEPS as f64;
    let mut lo = 0.0;
    let mut hi = None;
    for k in 1..=RAY_SCAN_STEPS {
        let t = if k == RAY_SCAN_STEPS { t_max } else { k as f64 * step };
        if f(t) > 0.0 {
            hi = Some(t);
            break;
        }
        lo = t;
    }
    let Some(mut hi) = hi else {
        return Err(OracleError::NoSignChange {
            inner,
            outer: f(t_max),
        });
    };
    while hi - lo > BISECTION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Radius of the first zero crossing along the ray at angle `theta`.
///
/// Requires `field(0, 0) < 0` and a strictly positive value somewhere on
/// the ray before `r_max`.
pub fn radial_profile<F: Field2 + ?Sized>(field: &F, theta: f64, r_max: f64) -> Result<f64, OracleError> {
    let (c, s) = (cos(theta), sin(theta));
    ray_root(|t| field.eval(t * c, t * s), r_max)
}

/// `n` angles `2π(k + ½)/n`, which avoid the axes and the diagonals.
pub fn half_offset_angles(n: usize) -> Vec<f64> {
    (0..n).map(|k| 2.0 * PI * (k as f64 + 0.5) / n as f64).collect()
}

/// Distance from the center to an axis-aligned square of half-side `r`.
pub fn axis_square_radius(theta: f64, r: f64) -> f64 {
    r / fabs(cos(theta)).max(fabs(sin(theta)))
}

/// Distance from the center to a 45°-tilted square with vertices at `±r`.
pub fn tilted_square_radius(theta: f64, r: f64) -> f64 {
    r / (fabs(cos(theta)) + fabs(sin(theta)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfileReport {
    pub angles: Vec<f64>,
    pub radii: Vec<f64>,
    pub reference: Vec<f64>,
    pub max_abs_error: f64,
}

/// Radial profile of `field` at `angles` compared with `reference(θ)`.
pub fn radial_profile_report<F: Field2 + ?Sized>(
    field: &F,
    angles: &[f64],
    r_max: f64,
    reference: impl Fn(f64) -> f64,
) -> Result<RadialProfileReport, OracleError> {
    let radii = angles
        .iter()
        .map(|&t| radial_profile(field, t, r_max))
        .collect::<Result<Vec<_>, _>>()?;
    let reference: Vec<f64> = angles.iter().map(|&t| reference(t)).collect();
    let max_abs_error = radii
        .iter()
        .zip(&reference)
        .map(|(a, b)| fabs(a - b))
        .fold(0.0, f64::max);
    Ok(RadialProfileReport {
        angles: angles.to_vec(),
        radii,
        reference,
        max_abs_error,
    })
}

/// Families whose small-squareness limit is checked analytically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitFamily {
    Periodic,
    Oblique,
}

/// The unit-radius curve solved for `x` at frequency `ω = sπ`.
///
/// Periodic: `x = (2/ω)·acos(cos(ω/2) / cos(ωy/2))`.
/// Oblique: `x = acos(1 + cos ω − cos ωy) / ω`.
pub fn isolated_x(family: LimitFamily, omega: f64, y: f64) -> Result<f64, OracleError> {
    let (argument, scale) = match family {
        LimitFamily::Periodic => (cos(omega / 2.0) / cos(omega * y / 2.0), 2.0 / omega),
        LimitFamily::Oblique => (1.0 + cos(omega) - cos(omega * y), 1.0 / omega),
    };
    if !(-1.0..=1.0).contains(&argument) {
        return Err(OracleError::Domain { omega, y, argument });
    }
    Ok(scale * acos(argument))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub omegas: Vec<f64>,
    /// `e(ω) = max_y |x(ω, y) − √(1 − y²)|`.
    pub errors: Vec<f64>,
    /// `e(ωᵢ) / e(ωᵢ₊₁)`.
    pub ratios: Vec<f64>,
}

impl ConvergenceReport {
    pub fn ratios_within(&self, lo: f64, hi: f64) -> bool {
        !self.ratios.is_empty() && self.ratios.iter().all(|r| (lo..=hi).contains(r))
    }
}

/// Measures how fast the curve approaches the unit circle as `ω → 0`.
///
/// A quadratic rate shows up as ratios near 4 under halving.
pub fn limit_convergence_check(
    family: LimitFamily,
    y_grid: &[f64],
    omegas: &[f64],
) -> Result<ConvergenceReport, OracleError> {
    let valid = !omegas.is_empty()
        && omegas.iter().all(|&w| w > 0.0 && w <= 0.5)
        && omegas
            .windows(2)
            .all(|w| fabs(w[1] - 0.5 * w[0]) <= 1e-12 * w[0]);
    if !valid {
        return Err(OracleError::BadOmegas);
    }
    let mut errors = Vec::with_capacity(omegas.len());
    for &omega in omegas {
        let mut e: f64 = 0.0;
        for &y in y_grid {
            let x = isolated_x(family, omega, y)?;
            e = e.max(fabs(x - sqrt(1.0 - y * y)));
        }
        errors.push(e);
    }
    let ratios = errors.windows(2).map(|w| w[0] / w[1]).collect();
    Ok(ConvergenceReport {
        omegas: omegas.to_vec(),
        errors,
        ratios,
    })
}

/// `n` midpoints of a uniform partition of `(−0.95, 0.95)`.
pub fn midpoint_y_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| -0.95 + 1.9 * (k as f64 + 0.5) / n as f64)
        .collect()
}

/// Segment from a point inside a solid to a point beyond its surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub inside: [f64; 3],
    pub outside: [f64; 3],
}

impl Probe {
    fn at(&self, t: f64) -> [f64; 3] {
        let mut p = self.inside;
        for a in 0..3 {
            p[a] += t * (self.outside[a] - self.inside[a]);
        }
        p
    }
}

/// Locates a zero of `reference` on every probe and returns the largest
/// `|alternate|` among them.
pub fn zero_set_residual<A: Field3 + ?Sized, B: Field3 + ?Sized>(
    reference: &A,
    alternate: &B,
    probes: &[Probe],
) -> Result<f64, OracleError> {
    let mut worst: f64 = 0.0;
    for probe in probes {
        let t = ray_root(
            |t| {
                let [x, y, z] = probe.at(t);
                reference.eval(x, y, z)
            },
            1.0,
        )?;
        let [x, y, z] = probe.at(t);
        worst = worst.max(fabs(alternate.eval(x, y, z)));
    }
    Ok(worst)
}

/// Probes from the tube-center circle of a torus with radii `big_r`, `r`,
/// reaching `1.5·r` into the tube cross-section.
///
/// Cross-section directions are evenly spaced with a half-step offset, so
/// none falls on a diagonal where square cross-sections have corners.
pub fn toroid_probes(big_r: f64, r: f64, count: usize, seed: u64) -> Vec<Probe> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let phi = rng.random_range(0.0..2.0 * PI);
            let psi = 2.0 * PI * (k as f64 + 0.5) / count as f64;
            let (cp, sp) = (cos(phi), sin(phi));
            let center = [big_r * cp, big_r * sp, 0.0];
            let reach = 1.5 * r;
            let outside = [
                center[0] + reach * cos(psi) * cp,
                center[1] + reach * cos(psi) * sp,
                reach * sin(psi),
            ];
            Probe {
                inside: center,
                outside,
            }
        })
        .collect()
}

/// Probes from the origin to random points with every coordinate of
/// magnitude in `[0.7π, π]`, bracketing the surface `cos x + cos y + cos z = 0`.
pub fn schwarz_probes(count: usize, seed: u64) -> Vec<Probe> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut outside = [0.0; 3];
            for c in &mut outside {
                let m = rng.random_range(0.7 * PI..=PI);
                *c = if rng.random::<bool>() { m } else { -m };
            }
            Probe {
                inside: [0.0; 3],
                outside,
            }
        })
        .collect()
}

/// Uniform random points in the box `[min, max]`.
pub fn random_points(count: usize, min: [f64; 3], max: [f64; 3], seed: u64) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| core::array::from_fn(|a| rng.random_range(min[a]..=max[a])))
        .collect()
}

/// Largest pointwise difference between two fields over `points`.
pub fn field_difference<A: Field3 + ?Sized, B: Field3 + ?Sized>(a: &A, b: &B, points: &[[f64; 3]]) -> f64 {
    points
        .iter()
        .map(|&[x, y, z]| fabs(a.eval(x, y, z) - b.eval(x, y, z)))
        .fold(0.0, f64::max)
}

/// Largest change of `field` under a shift by `period` along either axis,
/// over random points in `[−period, period]²`.
pub fn periodicity_check2d<F: Field2 + ?Sized>(field: &F, period: f64, probes: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..probes {
        let x = rng.random_range(-period..=period);
        let y = rng.random_range(-period..=period);
        let v = field.eval(x, y);
        worst = worst
            .max(fabs(field.eval(x + period, y) - v))
            .max(fabs(field.eval(x, y + period) - v));
    }
    worst
}

/// 3D version of [`periodicity_check2d`].
pub fn periodicity_check3d<F: Field3 + ?Sized>(field: &F, period: f64, probes: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..probes {
        let p: [f64; 3] = core::array::from_fn(|_| rng.random_range(-period..=period));
        let v = field.eval(p[0], p[1], p[2]);
        for a in 0..3 {
            let mut q = p;
            q[a] += period;
            worst = worst.max(fabs(field.eval(q[0], q[1], q[2]) - v));
        }
    }
    worst
}

/// Largest `|field|` on the lines the `s = 1` curve degenerates to.
///
/// Periodic: `x = (2n+1)r` and `y = (2n+1)r`. Oblique (`h = 0`):
/// `y = ±x + (2n+1)r`. Both for `n ∈ −2..=2`, sampled at `probes` random
/// positions per line within `|t| ≤ 5r`.
pub fn square_case_check(family: LimitFamily, r: f64, probes: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for n in -2i32..=2 {
        let offset = (2 * n + 1) as f64 * r;
        for _ in 0..probes {
            let t = rng.random_range(-5.0 * r..=5.0 * r);
            let values = match family {
                LimitFamily::Periodic => [
                    eval_periodic(offset, t, 1.0, r),
                    eval_periodic(t, offset, 1.0, r),
                ],
                LimitFamily::Oblique => [
                    eval_oblique(t, t + offset, 1.0, r, 0.0),
                    eval_oblique(t, -t + offset, 1.0, r, 0.0),
                ],
            };
            for v in values {
                worst = worst.max(fabs(v));
            }
        }
    }
    worst
}
