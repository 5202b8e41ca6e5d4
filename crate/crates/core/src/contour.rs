//! Regular-grid sampling and marching squares.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::Range;

use crate::error::{GridError, ShapeError};
use crate::field::Field2;
use crate::fields2d::frantz_point;

/// Axis-aligned sampling window with `nx × ny` cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain2D {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub nx: usize,
    pub ny: usize,
}

impl Domain2D {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64, nx: usize, ny: usize) -> Self {
        Domain2D {
            xmin,
            xmax,
            ymin,
            ymax,
            nx,
            ny,
        }
    }

    pub fn validate(&self) -> Result<(), GridError> {
        for (axis, min, max, cells) in [
            ('x', self.xmin, self.xmax, self.nx),
            ('y', self.ymin, self.ymax, self.ny),
        ] {
            if cells < 2 {
                return Err(GridError::TooFewCells { axis, cells });
            }
            if !(min.is_finite() && max.is_finite() && max > min) {
                return Err(GridError::EmptyAxis { axis, min, max });
            }
        }
        Ok(())
    }

    pub fn dx(&self) -> f64 {
        (self.xmax - self.xmin) / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        (self.ymax - self.ymin) / self.ny as f64
    }

    /// Coordinates of grid node `(i, j)`.
    #[inline]
    pub fn node(&self, i: usize, j: usize) -> [f64; 2] {
        [
            self.xmin + i as f64 * self.dx(),
            self.ymin + j as f64 * self.dy(),
        ]
    }

    pub fn sample_count(&self) -> usize {
        (self.nx + 1) * (self.ny + 1)
    }

    pub fn cell_diagonal(&self) -> f64 {
        libm::hypot(self.dx(), self.dy())
    }
}

/// Field samples on the nodes of a [`Domain2D`], row-major (x fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2D {
    domain: Domain2D,
    samples: Vec<f64>,
}

impl Grid2D {
    pub fn from_samples(domain: Domain2D, samples: Vec<f64>) -> Result<Self, GridError> {
        domain.validate()?;
        if samples.len() != domain.sample_count() {
            return Err(GridError::SampleCount {
                expected: domain.sample_count(),
                got: samples.len(),
            });
        }
        let row = domain.nx + 1;
        if let Some(k) = samples.iter().position(|v| !v.is_finite()) {
            let [x, y] = domain.node(k % row, k / row);
            return Err(GridError::NonFinite {
                x,
                y,
                z: 0.0,
                value: samples[k],
            });
        }
        Ok(Grid2D { domain, samples })
    }

    pub fn domain(&self) -> &Domain2D {
        &self.domain
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    #[inline]
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.samples[j * (self.domain.nx + 1) + i]
    }
}

/// Fills `out` with the samples of rows `rows` (each `nx + 1` long).
///
/// Shared by the sequential and the parallel samplers so both produce
/// bit-identical grids.
pub fn sample_rows2d<F: Field2 + ?Sized>(
    field: &F,
    domain: &Domain2D,
    rows: Range<usize>,
    out: &mut [f64],
) -> Result<(), GridError> {
    let width = domain.nx + 1;
    debug_assert_eq!(out.len(), rows.len() * width);
    for (row, j) in out.chunks_mut(width).zip(rows) {
        for (i, slot) in row.iter_mut().enumerate() {
            let [x, y] = domain.node(i, j);
            let v = field.eval(x, y);
            if !v.is_finite() {
                return Err(GridError::NonFinite {
                    x,
                    y,
                    z: 0.0,
                    value: v,
                });
            }
            *slot = v;
        }
    }
    Ok(())
}

/// Samples `field` on every node of `domain`.
pub fn sample_grid2d<F: Field2 + ?Sized>(field: &F, domain: &Domain2D) -> Result<Grid2D, GridError> {
    domain.validate()?;
    let mut samples = vec![0.0; domain.sample_count()];
    sample_rows2d(field, domain, 0..domain.ny + 1, &mut samples)?;
    Ok(Grid2D {
        domain: *domain,
        samples,
    })
}

/// Ordered 2D points; closed polylines do not repeat the first point.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub points: Vec<[f64; 2]>,
    pub closed: bool,
}

impl Polyline {
    /// Total length, including the closing segment of a closed polyline.
    pub fn length(&self) -> f64 {
        let mut total: f64 = self
            .points
            .windows(2)
            .map(|w| libm::hypot(w[1][0] - w[0][0], w[1][1] - w[0][1]))
            .sum();
        if self.closed && self.points.len() > 2 {
            let (a, b) = (self.points[self.points.len() - 1], self.points[0]);
            total += libm::hypot(b[0] - a[0], b[1] - a[1]);
        }
        total
    }
}

/// Samples within this fraction of the largest sample magnitude of zero
/// are moved to the positive side by that amount.
///
/// Besides settling exact zeros this keeps every interpolated vertex a
/// representable distance away from the cell corners, so welded vertices
/// never coincide, and it stops rounding noise from deciding the side of
/// nodes that lie on a flat face of the surface.
pub const ZERO_NUDGE: f64 = 1e-12;

/// Sign-classified sample accessor shared by the 2D and 3D extractors.
pub(crate) struct Nudged<'a> {
    samples: &'a [f64],
    eps: f64,
}

impl<'a> Nudged<'a> {
    /// `None` when no strict sign change exists, i.e. the level set is empty
    /// or only touched.
    pub(crate) fn new(samples: &'a [f64]) -> Option<Self> {
        let scale = samples.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let eps = ZERO_NUDGE * scale;
        let neg = samples.iter().any(|&v| v < -eps);
        let pos = samples.iter().any(|&v| v > 0.0);
        (neg && pos).then_some(Nudged { samples, eps })
    }

    #[inline]
    pub(crate) fn get(&self, k: usize) -> f64 {
        self.nudge(self.samples[k])
    }

    #[inline]
    pub(crate) fn nudge(&self, v: f64) -> f64 {
        if v.abs() <= self.eps {
            self.eps
        } else {
            v
        }
    }
}

/// Point where the zero level set crosses the segment `pa → pb`.
#[inline]
pub(crate) fn interpolate<const D: usize>(pa: [f64; D], pb: [f64; D], va: f64, vb: f64) -> [f64; D] {
    let t = va / (va - vb);
    let mut out = pa;
    for k in 0..D {
        out[k] = pa[k] + t * (pb[k] - pa[k]);
    }
    out
}

/// Extracts the zero level set of `grid` as polylines.
///
/// Vertices are linearly interpolated along cell edges. Saddle cells are
/// resolved by sampling `field` at the cell center. Polylines are oriented
/// with the negative side on the left, chained across cells, and returned
/// in row-major order of their first cell. Polylines ending on the domain
/// boundary are open.
pub fn marching_squares<F: Field2 + ?Sized>(grid: &Grid2D, field: &F) -> Vec<Polyline> {
    let Some(vals) = Nudged::new(&grid.samples) else {
        return Vec::new();
    };
    let d = grid.domain;
    let width = d.nx + 1;
    let node = |i: usize, j: usize| j * width + i;
    let h_edge = |i: usize, j: usize| 2 * node(i, j);
    let v_edge = |i: usize, j: usize| 2 * node(i, j) + 1;

    let mut segments: Vec<(usize, usize)> = Vec::new();
    for j in 0..d.ny {
        for i in 0..d.nx {
            // Corners and edges counter-clockwise from the lower-left corner.
            let corners = [node(i, j), node(i + 1, j), node(i + 1, j + 1), node(i, j + 1)];
            let edges = [h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)];
            let inside = corners.map(|k| vals.get(k) < 0.0);
            // (edge, is_exit): exits leave the negative region going CCW.
            let mut crossings = [(0usize, false); 4];
            let mut n = 0;
            for e in 0..4 {
                let (a, b) = (inside[e], inside[(e + 1) % 4]);
                if a != b {
                    crossings[n] = (edges[e], a);
                    n += 1;
                }
            }
            match n {
                0 => {}
                2 => {
                    let (exit, entry) = if crossings[0].1 {
                        (crossings[0].0, crossings[1].0)
                    } else {
                        (crossings[1].0, crossings[0].0)
                    };
                    segments.push((exit, entry));
                }
                4 => {
                    let [x0, y0] = d.node(i, j);
                    let center = vals.nudge(field.eval(x0 + 0.5 * d.dx(), y0 + 0.5 * d.dy()));
                    // Joined diagonal: pair each exit with the next entry;
                    // separated corners: with the previous one.
                    let offset = if center < 0.0 { 1 } else { 3 };
                    for k in 0..4 {
                        if crossings[k].1 {
                            segments.push((crossings[k].0, crossings[(k + offset) % 4].0));
                        }
                    }
                }
                _ => unreachable!("a cell has an even number of sign changes"),
            }
        }
    }

    let point = |edge: usize| -> [f64; 2] {
        let a = edge / 2;
        let b = if edge % 2 == 0 { a + 1 } else { a + width };
        let pa = d.node(a % width, a / width);
        let pb = d.node(b % width, b / width);
        interpolate(pa, pb, vals.get(a), vals.get(b))
    };

    chain(&segments, 2 * grid.samples.len(), point)
}

fn chain(
    segments: &[(usize, usize)],
    edge_count: usize,
    point: impl Fn(usize) -> [f64; 2],
) -> Vec<Polyline> {
    const NONE: usize = usize::MAX;
    let mut outgoing = vec![NONE; edge_count];
    let mut has_incoming = vec![false; edge_count];
    for (k, &(from, to)) in segments.iter().enumerate() {
        outgoing[from] = k;
        has_incoming[to] = true;
    }

    let mut visited = vec![false; segments.len()];
    let mut found: Vec<(usize, Polyline)> = Vec::new();
    let mut walk = |start: usize, closed: bool, visited: &mut [bool]| {
        let mut first_cell = start;
        let mut points = vec![point(segments[start].0)];
        let mut k = start;
        loop {
            visited[k] = true;
            first_cell = first_cell.min(k);
            let next = outgoing[segments[k].1];
            if next == NONE || visited[next] {
                if !closed {
                    points.push(point(segments[k].1));
                }
                break;
            }
            points.push(point(segments[next].0));
            k = next;
        }
        points.dedup();
        if closed && points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        if points.len() >= 2 {
            found.push((first_cell, Polyline { points, closed }));
        }
    };
    for k in 0..segments.len() {
        if !has_incoming[segments[k].0] {
            walk(k, false, &mut visited);
        }
    }
    for k in 0..segments.len() {
        if !visited[k] {
            walk(k, true, &mut visited);
        }
    }
    found.sort_by_key(|(first, _)| *first);
    found.into_iter().map(|(_, p)| p).collect()
}

/// Closed polyline through `n` Frantz squircle points at `t = 2πk/n`.
pub fn frantz_polyline(s: f64, r: f64, n: usize) -> Result<Polyline, ShapeError> {
    ShapeError::check("samples", n as f64, "[8, inf)", n >= 8)?;
    ShapeError::check("radius", r, "(0, inf)", r > 0.0 && r.is_finite())?;
    ShapeError::check("squareness", s, "[0, inf)", s >= 0.0 && s.is_finite())?;
    let points = (0..n)
        .map(|k| {
            let (x, y) = frantz_point(2.0 * PI * k as f64 / n as f64, s, r);
            [x, y]
        })
        .collect();
    Ok(Polyline {
        points,
        closed: true,
    })
}
