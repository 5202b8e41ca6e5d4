//! Squircle curves and squircular implicit surfaces.
//!
//! Every shape is expressed as a scalar field with the inside-negative
//! convention: the curve or surface is the zero level set and the solid
//! interior evaluates negative. On top of the fields the crate provides
//! marching squares and marching cubes extraction, mesh diagnostics, and a
//! set of numerical checks for the limiting behaviour of each family.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! the parallel drivers live in the `squircle` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod contour;
mod error;
pub mod field;
pub mod fields2d;
pub mod fields3d;
pub mod oracle;
pub mod polygonize;
mod tables;
pub mod topology;

pub use contour::{
    frantz_polyline, marching_squares, sample_grid2d, Domain2D, Grid2D, Polyline,
};
pub use error::{GridError, OracleError, ShapeError};
pub use field::{csg_intersect, Field2, Field3, Intersection};
pub use fields2d::{make_field2d, CurveField, Family2D, ShapeSpec2D};
pub use fields3d::{make_field3d, Family3D, ShapeSpec3D, SurfaceField};
pub use polygonize::{marching_cubes, sample_grid3d, Domain3D, Grid3D, TriangleMesh};
pub use topology::{mesh_stats, MeshStats};
