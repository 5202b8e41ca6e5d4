//! Counting diagnostics for triangle meshes.

use alloc::vec::Vec;

use crate::polygonize::{cross, sub, TriangleMesh};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshStats {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub triangle_count: usize,
    /// `V − E + F`.
    pub euler_characteristic: i64,
    /// Every edge has exactly two incident triangles.
    pub watertight: bool,
    /// Edges with a single incident triangle.
    pub boundary_edge_count: usize,
    pub total_area: f64,
}

pub fn mesh_stats(mesh: &TriangleMesh) -> MeshStats {
    let mut edges: Vec<(u32, u32)> = mesh
        .triangles
        .iter()
        .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])])
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();

    let mut edge_count = 0;
    let mut boundary = 0;
    let mut manifold = true;
    for run in edges.chunk_by(|a, b| a == b) {
        edge_count += 1;
        match run.len() {
            1 => boundary += 1,
            2 => {}
            _ => manifold = false,
        }
    }

    let total_area = mesh
        .triangles
        .iter()
        .map(|t| {
            let [a, b, c] = mesh.corners(t);
            let n = cross(sub(b, a), sub(c, a));
            0.5 * libm::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2])
        })
        .sum();

    let (v, e, f) = (mesh.vertices.len(), edge_count, mesh.triangles.len());
    MeshStats {
        vertex_count: v,
        edge_count: e,
        triangle_count: f,
        euler_characteristic: v as i64 - e as i64 + f as i64,
        watertight: manifold && boundary == 0,
        boundary_edge_count: boundary,
        total_area,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn single_triangle() {
        let mesh = TriangleMesh {
            vertices: vec![[0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
            triangles: vec![[0, 1, 2]],
        };
        let s = mesh_stats(&mesh);
        assert_eq!((s.vertex_count, s.edge_count, s.triangle_count), (3, 3, 1));
        assert_eq!(s.euler_characteristic, 1);
        assert_eq!(s.boundary_edge_count, 3);
        assert!(!s.watertight);
        assert_eq!(s.total_area, 0.5);
    }

    #[test]
    fn tetrahedron() {
        let mesh = TriangleMesh {
            vertices: vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]],
            triangles: vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
        };
        let s = mesh_stats(&mesh);
        assert_eq!(s.euler_characteristic, 2);
        assert!(s.watertight);
        assert_eq!(s.boundary_edge_count, 0);
        // Four equilateral faces with side 2√2.
        assert!((s.total_area - 8.0 * libm::sqrt(3.0)).abs() < 1e-12);
    }

    #[test]
    fn empty() {
        let s = mesh_stats(&TriangleMesh::default());
        assert_eq!(s.euler_characteristic, 0);
        assert!(s.watertight);
    }

    #[test]
    fn non_manifold_edge_is_not_watertight() {
        let mesh = TriangleMesh {
            vertices: vec![[0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]],
            triangles: vec![[0, 1, 2], [1, 0, 3], [0, 1, 4]],
        };
        let s = mesh_stats(&mesh);
        assert!(!s.watertight);
    }
}
