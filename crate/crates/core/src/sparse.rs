//! Minimal compressed-sparse-row matrix used by the mesh Laplacians and the
//! joint regressor.

use crate::Vec3;
use nalgebra::DMatrix;

/// Row-compressed sparse matrix with f64 entries.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    nrows: usize,
    ncols: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<f64>,
}

impl CsrMatrix {
    /// Builds from per-row (column, value) lists. Columns within a row must be
    /// strictly increasing.
    pub fn from_rows(ncols: usize, rows: &[Vec<(usize, f64)>]) -> Self {
        let nrows = rows.len();
        let mut row_offsets = Vec::with_capacity(nrows + 1);
        let mut col_indices = Vec::new();
        let mut values = Vec::new();
        row_offsets.push(0);
        for row in rows {
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
            for &(c, v) in row {
                assert!(c < ncols, "column index out of bounds");
                col_indices.push(c);
                values.push(v);
            }
            row_offsets.push(col_indices.len());
        }
        CsrMatrix {
            nrows,
            ncols,
            row_offsets,
            col_indices,
            values,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Entries of row `i` as (column, value) pairs.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let lo = self.row_offsets[i];
        let hi = self.row_offsets[i + 1];
        self.col_indices[lo..hi]
            .iter()
            .copied()
            .zip(self.values[lo..hi].iter().copied())
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.row(i).map(|(_, v)| v).sum()
    }

    /// y = A x for a scalar vector.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.ncols);
        (0..self.nrows)
            .map(|i| self.row(i).map(|(c, v)| v * x[c]).sum())
            .collect()
    }

    /// Applies the matrix to an array of 3D points (one per column index).
    pub fn mul_points(&self, pts: &[Vec3]) -> Vec<Vec3> {
        assert_eq!(pts.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut acc = Vec3::zeros();
                for (c, v) in self.row(i) {
                    acc += v * pts[c];
                }
                acc
            })
            .collect()
    }

    /// y = A^T x for an array of 3D points.
    pub fn mul_points_transpose(&self, x: &[Vec3]) -> Vec<Vec3> {
        assert_eq!(x.len(), self.nrows);
        let mut out = vec![Vec3::zeros(); self.ncols];
        for i in 0..self.nrows {
            for (c, v) in self.row(i) {
                out[c] += v * x[i];
            }
        }
        out
    }

    /// Y = A X for a dense matrix whose rows correspond to this matrix's
    /// columns.
    pub fn mul_dense(&self, x: &DMatrix<f64>) -> DMatrix<f64> {
        assert_eq!(x.nrows(), self.ncols);
        let mut out = DMatrix::zeros(self.nrows, x.ncols());
        for i in 0..self.nrows {
            for (c, v) in self.row(i) {
                for k in 0..x.ncols() {
                    out[(i, k)] += v * x[(c, k)];
                }
            }
        }
        out
    }

    /// Dense copy, for small oracles and tests.
    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            for (c, v) in self.row(i) {
                out[(i, c)] = v;
            }
        }
        out
    }
}
