//! Multi-threaded sampling and extraction.
//!
//! Work is split into fixed-size row bands (2D) or z-slabs (3D) that do not
//! depend on the worker count, and results are merged in band order, so the
//! output is identical for any number of threads.

use rayon::prelude::*;
use squircle_core::contour::sample_rows2d;
use squircle_core::polygonize::{sample_layers3d, MarchingCubes};
use squircle_core::{
    marching_squares, Domain2D, Domain3D, Field2, Field3, Grid2D, Grid3D, GridError, Polyline,
    TriangleMesh,
};

/// Environment variable overriding the number of worker threads.
pub const WORKERS_ENV: &str = "SQUIRCLE_WORKERS";

const BAND_ROWS: usize = 8;
const SLAB_LAYERS: usize = 4;

/// Worker count from [`WORKERS_ENV`], defaulting to all cores.
pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub struct Engine {
    pool: rayon::ThreadPool,
}

impl Engine {
    pub fn new(workers: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build()
            .expect("thread pool");
        Engine { pool }
    }

    pub fn from_env() -> Self {
        Engine::new(worker_count())
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn sample2d<F: Field2 + Sync + ?Sized>(&self, field: &F, domain: &Domain2D) -> Result<Grid2D, GridError> {
        domain.validate()?;
        let width = domain.nx + 1;
        let rows = domain.ny + 1;
        let mut samples = vec![0.0; domain.sample_count()];
        let results: Vec<_> = self.pool.install(|| {
            samples
                .par_chunks_mut(BAND_ROWS * width)
                .enumerate()
                .map(|(b, chunk)| {
                    let start = b * BAND_ROWS;
                    sample_rows2d(field, domain, start..(start + BAND_ROWS).min(rows), chunk)
                })
                .collect()
        });
        results.into_iter().collect::<Result<(), _>>()?;
        Grid2D::from_samples(*domain, samples)
    }

    pub fn sample3d<F: Field3 + Sync + ?Sized>(&self, field: &F, domain: &Domain3D) -> Result<Grid3D, GridError> {
        domain.validate()?;
        let layer = domain.layer_len();
        let layers = domain.cells[2] + 1;
        let mut samples = vec![0.0; domain.sample_count()];
        let results: Vec<_> = self.pool.install(|| {
            samples
                .par_chunks_mut(layer)
                .enumerate()
                .map(|(k, chunk)| sample_layers3d(field, domain, k..k + 1, chunk))
                .collect()
        });
        debug_assert_eq!(results.len(), layers);
        results.into_iter().collect::<Result<(), _>>()?;
        Grid3D::from_samples(*domain, samples)
    }

    /// Samples `field` and extracts its zero level set.
    pub fn contour<F: Field2 + Sync + ?Sized>(&self, field: &F, domain: &Domain2D) -> Result<Vec<Polyline>, GridError> {
        let grid = self.sample2d(field, domain)?;
        Ok(marching_squares(&grid, field))
    }

    /// Samples `field` and polygonizes its zero level set.
    pub fn polygonize<F: Field3 + Sync + ?Sized>(&self, field: &F, domain: &Domain3D) -> Result<TriangleMesh, GridError> {
        let grid = self.sample3d(field, domain)?;
        Ok(self.march(&grid))
    }

    pub fn march(&self, grid: &Grid3D) -> TriangleMesh {
        let Some(mc) = MarchingCubes::new(grid) else {
            return TriangleMesh::default();
        };
        let nz = grid.domain().cells[2];
        let slabs: Vec<_> = self.pool.install(|| {
            (0..nz.div_ceil(SLAB_LAYERS))
                .into_par_iter()
                .map(|s| mc.extract(s * SLAB_LAYERS..((s + 1) * SLAB_LAYERS).min(nz)))
                .collect()
        });
        mc.assemble(slabs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use squircle_core::{
        make_field2d, make_field3d, marching_cubes, sample_grid2d, sample_grid3d, ShapeSpec2D,
        ShapeSpec3D,
    };

    #[test]
    fn matches_sequential_extraction() {
        let spec = ShapeSpec3D::periodic3d(0.8, 1.0).with_tiling(true);
        let f = make_field3d(&spec).unwrap();
        let d = spec.default_domain(2, 37);
        let seq = marching_cubes(&sample_grid3d(&f, &d).unwrap());
        for workers in [1, 3, 8] {
            assert_eq!(Engine::new(workers).polygonize(&f, &d).unwrap(), seq);
        }

        let spec = ShapeSpec2D::oblique(0.7, 1.0, 0.0);
        let f = make_field2d(&spec).unwrap();
        let d = spec.default_domain(3, 101);
        let seq = marching_squares(&sample_grid2d(&f, &d).unwrap(), &f);
        for workers in [1, 5] {
            assert_eq!(Engine::new(workers).contour(&f, &d).unwrap(), seq);
        }
    }

    #[test]
    fn reports_non_finite_samples() {
        let f = |x: f64, _: f64, _: f64| 1.0 / x;
        let err = Engine::new(2).polygonize(&f, &Domain3D::cube(1.0, 4)).unwrap_err();
        assert!(matches!(err, GridError::NonFinite { .. }));
    }
}
