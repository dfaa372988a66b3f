//! Uniform (combinatorial, degree-normalized) mesh Laplacian.
//!
//! Row i is `1` on the diagonal and `-1/deg(i)` on each neighbor, so applying
//! the matrix to the vertex array yields per-vertex differential coordinates
//! and every row sums to zero. The uniform flavor is robust on low-quality
//! meshes and translation-invariant by construction, unlike the cotangent
//! Laplacian.

use super::Mesh;
use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;
use crate::Vec3;

/// Sparse uniform Laplacian over the mesh vertices.
#[derive(Debug, Clone)]
pub struct LaplacianMatrix {
    matrix: CsrMatrix,
}

impl LaplacianMatrix {
    pub fn matrix(&self) -> &CsrMatrix {
        &self.matrix
    }

    pub fn vertex_count(&self) -> usize {
        self.matrix.nrows()
    }

    /// Differential coordinates: L applied to the vertex positions.
    pub fn apply(&self, vertices: &[Vec3]) -> Vec<Vec3> {
        self.matrix.mul_points(vertices)
    }

    /// L^T applied to per-vertex vectors (needed by registration gradients;
    /// the degree normalization makes L non-symmetric).
    pub fn apply_transpose(&self, rows: &[Vec3]) -> Vec<Vec3> {
        self.matrix.mul_points_transpose(rows)
    }
}

/// Builds the uniform Laplacian. Errors on isolated vertices, naming the
/// vertex index.
pub fn build_laplacian(mesh: &Mesh) -> Result<LaplacianMatrix> {
    let adjacency = mesh.vertex_adjacency();
    let mut rows = Vec::with_capacity(adjacency.len());
    for (i, neighbors) in adjacency.iter().enumerate() {
        if neighbors.is_empty() {
            return Err(Error::IsolatedVertex { vertex: i });
        }
        let w = -1.0 / neighbors.len() as f64;
        let mut entries = Vec::with_capacity(neighbors.len() + 1);
        let mut diagonal_placed = false;
        for &j in neighbors {
            if !diagonal_placed && j > i {
                entries.push((i, 1.0));
                diagonal_placed = true;
            }
            entries.push((j, w));
        }
        if !diagonal_placed {
            entries.push((i, 1.0));
        }
        rows.push(entries);
    }
    Ok(LaplacianMatrix {
        matrix: CsrMatrix::from_rows(adjacency.len(), &rows),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::shapes;
    use approx::assert_relative_eq;
    use nalgebra::DMatrix;

    #[test]
    fn single_triangle_rows() {
        let m = Mesh::new(
            vec![
                Vec3::new(0.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let l = build_laplacian(&m).unwrap().matrix().to_dense();
        let expected = DMatrix::from_row_slice(
            3,
            3,
            &[1.0, -0.5, -0.5, -0.5, 1.0, -0.5, -0.5, -0.5, 1.0],
        );
        assert_eq!(l, expected);
    }

    #[test]
    fn rows_sum_to_zero() {
        let m = shapes::icosphere(2, 0.5);
        let l = build_laplacian(&m).unwrap();
        for i in 0..m.vertex_count() {
            assert!(l.matrix().row_sum(i).abs() < 1e-12);
        }
    }

    #[test]
    fn translation_invariance() {
        let m = shapes::icosphere(1, 1.0);
        let l = build_laplacian(&m).unwrap();
        let base = l.apply(m.vertices());
        let shift = Vec3::new(0.3, -1.7, 2.5);
        let moved: Vec<Vec3> = m.vertices().iter().map(|v| v + shift).collect();
        let shifted = l.apply(&moved);
        for (a, b) in base.iter().zip(&shifted) {
            // Exact: the shift contributes c * (row sum) and each row's
            // neighbor weights add to exactly -1 before the diagonal's +1.
            assert_relative_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn tetrahedron_matches_dense_oracle() {
        // Brute-force row construction: L = I - A/3 for the complete graph
        // on 4 vertices, applied to the centered tetrahedron.
        let m = shapes::tetrahedron();
        let l = build_laplacian(&m).unwrap();
        let applied = l.apply(m.vertices());

        let mut dense = DMatrix::from_element(4, 4, -1.0 / 3.0);
        for i in 0..4 {
            dense[(i, i)] = 1.0;
        }
        for i in 0..4 {
            let mut expect = Vec3::zeros();
            for j in 0..4 {
                expect += dense[(i, j)] * m.vertices()[j];
            }
            assert_relative_eq!(applied[i], expect, epsilon = 1e-14);
            // Centered complete graph: L V = (4/3) V row-wise.
            assert_relative_eq!(applied[i], m.vertices()[i] * (4.0 / 3.0), epsilon = 1e-14);
        }
    }

    #[test]
    fn isolated_vertex_is_reported() {
        let m = Mesh::new(
            vec![
                Vec3::new(0.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
                Vec3::new(5.0, 5.0, 5.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap();
        match build_laplacian(&m) {
            Err(Error::IsolatedVertex { vertex: 3 }) => {}
            other => panic!("expected IsolatedVertex {{ 3 }}, got {other:?}"),
        }
    }
}
