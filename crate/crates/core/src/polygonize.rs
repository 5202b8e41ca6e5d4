//! Regular-grid sampling and marching cubes.
//!
//! Corners of a cell are numbered
//!
//! ```text
//!   0:(0,0,0) 1:(1,0,0) 2:(1,1,0) 3:(0,1,0)
//!   4:(0,0,1) 5:(1,0,1) 6:(1,1,1) 7:(0,1,1)
//! ```
//!
//! and edges 0–3 / 4–7 run around the bottom / top faces, 8–11 are the
//! vertical edges above corners 0–3.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::contour::{interpolate, Nudged};
use crate::error::GridError;
use crate::field::Field3;
use crate::tables::TRI_TABLE;

/// Axis-aligned box with `cells[a]` cells along axis `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain3D {
    pub min: [f64; 3],
    pub max: [f64; 3],
    pub cells: [usize; 3],
}

impl Domain3D {
    pub fn new(min: [f64; 3], max: [f64; 3], cells: [usize; 3]) -> Self {
        Domain3D { min, max, cells }
    }

    /// `[-half, half]³` with `cells` cells per axis.
    pub fn cube(half: f64, cells: usize) -> Self {
        Domain3D::new([-half; 3], [half; 3], [cells; 3])
    }

    pub fn validate(&self) -> Result<(), GridError> {
        for (a, axis) in ['x', 'y', 'z'].into_iter().enumerate() {
            if self.cells[a] < 2 {
                return Err(GridError::TooFewCells {
                    axis,
                    cells: self.cells[a],
                });
            }
            let (min, max) = (self.min[a], self.max[a]);
            if !(min.is_finite() && max.is_finite() && max > min) {
                return Err(GridError::EmptyAxis { axis, min, max });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn step(&self, axis: usize) -> f64 {
        (self.max[axis] - self.min[axis]) / self.cells[axis] as f64
    }

    #[inline]
    pub fn node(&self, i: usize, j: usize, k: usize) -> [f64; 3] {
        [
            self.min[0] + i as f64 * self.step(0),
            self.min[1] + j as f64 * self.step(1),
            self.min[2] + k as f64 * self.step(2),
        ]
    }

    /// Number of samples in one z-layer.
    pub fn layer_len(&self) -> usize {
        (self.cells[0] + 1) * (self.cells[1] + 1)
    }

    pub fn sample_count(&self) -> usize {
        self.layer_len() * (self.cells[2] + 1)
    }

    pub fn cell_diagonal(&self) -> f64 {
        let [a, b, c] = [self.step(0), self.step(1), self.step(2)];
        libm::sqrt(a * a + b * b + c * c)
    }

    #[inline]
    fn unflatten(&self, n: usize) -> [usize; 3] {
        let w = self.cells[0] + 1;
        let layer = self.layer_len();
        [n % w, (n % layer) / w, n / layer]
    }
}

/// Field samples on the nodes of a [`Domain3D`], x fastest then y then z.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid3D {
    domain: Domain3D,
    samples: Vec<f64>,
}

impl Grid3D {
    pub fn from_samples(domain: Domain3D, samples: Vec<f64>) -> Result<Self, GridError> {
        domain.validate()?;
        if samples.len() != domain.sample_count() {
            return Err(GridError::SampleCount {
                expected: domain.sample_count(),
                got: samples.len(),
            });
        }
        if let Some(n) = samples.iter().position(|v| !v.is_finite()) {
            let [i, j, k] = domain.unflatten(n);
            let [x, y, z] = domain.node(i, j, k);
            return Err(GridError::NonFinite {
                x,
                y,
                z,
                value: samples[n],
            });
        }
        Ok(Grid3D { domain, samples })
    }

    pub fn domain(&self) -> &Domain3D {
        &self.domain
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    #[inline]
    pub fn value(&self, i: usize, j: usize, k: usize) -> f64 {
        let w = self.domain.cells[0] + 1;
        self.samples[i + w * j + self.domain.layer_len() * k]
    }
}

/// Fills `out` with the z-layers `layers` of the sample grid.
pub fn sample_layers3d<F: Field3 + ?Sized>(
    field: &F,
    domain: &Domain3D,
    layers: Range<usize>,
    out: &mut [f64],
) -> Result<(), GridError> {
    let [nx, ny, _] = domain.cells;
    debug_assert_eq!(out.len(), layers.len() * domain.layer_len());
    let mut slots = out.iter_mut();
    for k in layers {
        for j in 0..=ny {
            for i in 0..=nx {
                let [x, y, z] = domain.node(i, j, k);
                let v = field.eval(x, y, z);
                if !v.is_finite() {
                    return Err(GridError::NonFinite { x, y, z, value: v });
                }
                *slots.next().expect("output sized to the layers") = v;
            }
        }
    }
    Ok(())
}

pub fn sample_grid3d<F: Field3 + ?Sized>(field: &F, domain: &Domain3D) -> Result<Grid3D, GridError> {
    domain.validate()?;
    let mut samples = vec![0.0; domain.sample_count()];
    sample_layers3d(field, domain, 0..domain.cells[2] + 1, &mut samples)?;
    Ok(Grid3D {
        domain: *domain,
        samples,
    })
}

/// Indexed triangle mesh, counter-clockwise seen from the positive side.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TriangleMesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[u32; 3]>,
}

impl TriangleMesh {
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn corners(&self, t: &[u32; 3]) -> [[f64; 3]; 3] {
        t.map(|v| self.vertices[v as usize])
    }

    /// Volume enclosed by a closed mesh; positive for outward winding.
    pub fn signed_volume(&self) -> f64 {
        self.triangles
            .iter()
            .map(|t| {
                let [a, b, c] = self.corners(t);
                dot(a, cross(b, c)) / 6.0
            })
            .sum()
    }
}

#[inline]
pub(crate) fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

const CORNERS: [[usize; 3]; 8] = [
    [0, 0, 0],
    [1, 0, 0],
    [1, 1, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 0, 1],
    [1, 1, 1],
    [0, 1, 1],
];

/// Each cell edge as (offset of its lower node, axis).
const EDGES: [([usize; 3], usize); 12] = [
    ([0, 0, 0], 0),
    ([1, 0, 0], 1),
    ([0, 1, 0], 0),
    ([0, 0, 0], 1),
    ([0, 0, 1], 0),
    ([1, 0, 1], 1),
    ([0, 1, 1], 0),
    ([0, 0, 1], 1),
    ([0, 0, 0], 2),
    ([1, 0, 0], 2),
    ([1, 1, 0], 2),
    ([0, 1, 0], 2),
];

/// Triangles of one slab of cells, as triples of global edge ids.
pub type SlabTriangles = Vec<[usize; 3]>;

/// Marching cubes over a sampled grid, split into independent z-slabs.
///
/// A global edge id is `3 · node + axis`, where `node` is the flat index
/// of the edge's lower endpoint. Slabs can be extracted in any order or in
/// parallel; [`assemble`](Self::assemble) welds them in slab order so the
/// result only depends on the grid.
pub struct MarchingCubes<'a> {
    grid: &'a Grid3D,
    vals: Nudged<'a>,
}

impl<'a> MarchingCubes<'a> {
    /// `None` when the grid has no strict sign change.
    pub fn new(grid: &'a Grid3D) -> Option<Self> {
        Nudged::new(&grid.samples).map(|vals| MarchingCubes { grid, vals })
    }

    /// Emits triangles for the cell layers `layers` (z cell indices).
    pub fn extract(&self, layers: Range<usize>) -> SlabTriangles {
        let d = &self.grid.domain;
        let w = d.cells[0] + 1;
        let layer = d.layer_len();
        let node = |i: usize, j: usize, k: usize| i + w * j + layer * k;
        let mut out = Vec::new();
        for k in layers {
            for j in 0..d.cells[1] {
                for i in 0..d.cells[0] {
                    let mut mask = 0usize;
                    for (bit, c) in CORNERS.iter().enumerate() {
                        if self.vals.get(node(i + c[0], j + c[1], k + c[2])) < 0.0 {
                            mask |= 1 << bit;
                        }
                    }
                    let row = &TRI_TABLE[mask];
                    for tri in row.chunks_exact(3).take_while(|t| t[0] >= 0) {
                        let id = |e: i8| {
                            let (o, axis) = EDGES[e as usize];
                            3 * node(i + o[0], j + o[1], k + o[2]) + axis
                        };
                        // The table winds toward the negative corners.
                        out.push([id(tri[0]), id(tri[2]), id(tri[1])]);
                    }
                }
            }
        }
        out
    }

    /// Position of the crossing on global edge `edge`.
    pub fn edge_point(&self, edge: usize) -> [f64; 3] {
        let d = &self.grid.domain;
        let (a, axis) = (edge / 3, edge % 3);
        let b = a + [1, d.cells[0] + 1, d.layer_len()][axis];
        let [i, j, k] = d.unflatten(a);
        let pa = d.node(i, j, k);
        let mut step = [0; 3];
        step[axis] = 1;
        let pb = d.node(i + step[0], j + step[1], k + step[2]);
        interpolate(pa, pb, self.vals.get(a), self.vals.get(b))
    }

    /// Welds slab outputs, given in slab order, into one mesh.
    ///
    /// Vertices are numbered by first appearance; triangles with an exactly
    /// zero cross product are dropped before numbering.
    pub fn assemble<I: IntoIterator<Item = SlabTriangles>>(&self, slabs: I) -> TriangleMesh {
        const NONE: u32 = u32::MAX;
        let mut index = vec![NONE; 3 * self.grid.samples.len()];
        let mut mesh = TriangleMesh::default();
        for slab in slabs {
            for ids in slab {
                let p = ids.map(|e| self.edge_point(e));
                let n = cross(sub(p[1], p[0]), sub(p[2], p[0]));
                if n == [0.0; 3] {
                    continue;
                }
                let mut tri = [0u32; 3];
                for (slot, (&e, &pos)) in tri.iter_mut().zip(ids.iter().zip(&p)) {
                    if index[e] == NONE {
                        index[e] = mesh.vertices.len() as u32;
                        mesh.vertices.push(pos);
                    }
                    *slot = index[e];
                }
                mesh.triangles.push(tri);
            }
        }
        mesh
    }
}

/// Single-threaded marching cubes over the whole grid.
pub fn marching_cubes(grid: &Grid3D) -> TriangleMesh {
    match MarchingCubes::new(grid) {
        Some(mc) => mc.assemble([mc.extract(0..grid.domain.cells[2])]),
        None => TriangleMesh::default(),
    }
}
