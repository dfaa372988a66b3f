//! Fixed-topology triangle mesh with adjacency, normals, uniform Laplacian
//! and midpoint subdivision.
//!
//! A [`Mesh`] is immutable after construction and safe to share across
//! threads. All registration paths in this crate preserve the face list
//! bit-for-bit; only vertex positions move.

mod laplacian;
mod mask;
mod obj;
pub mod shapes;
mod subdivide;

pub use laplacian::{build_laplacian, LaplacianMatrix};
pub use mask::VertexMask;
pub use obj::{read_obj, write_obj};
pub use subdivide::{subdivide_midpoint, SubdivisionMap, VertexOrigin};

use crate::error::{Error, Result};
use crate::Vec3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb {
    pub min: Vec3,
    pub max: Vec3,
}

impl Aabb {
    pub fn new(min: Vec3, max: Vec3) -> Self {
        Aabb { min, max }
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        (0..3).all(|a| p[a] >= self.min[a] && p[a] <= self.max[a])
    }

    pub fn center(&self) -> Vec3 {
        0.5 * (self.min + self.max)
    }

    pub fn extents(&self) -> Vec3 {
        self.max - self.min
    }

    /// Grows the box by `fraction` of its extent on every side.
    pub fn expanded(&self, fraction: f64) -> Aabb {
        let pad = self.extents() * fraction;
        Aabb {
            min: self.min - pad,
            max: self.max + pad,
        }
    }

    /// Smallest box containing both.
    pub fn union(&self, other: &Aabb) -> Aabb {
        Aabb {
            min: self.min.inf(&other.min),
            max: self.max.sup(&other.max),
        }
    }
}

/// Triangle mesh: vertex positions in model units (meters) plus a face list
/// of vertex-index triples with counter-clockwise outward winding.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    vertices: Vec<Vec3>,
    faces: Vec<[usize; 3]>,
    /// Optional tag carried through I/O, e.g. the generator that produced it.
    pub name: Option<String>,
}

impl Mesh {
    /// Validates index bounds and distinctness. Geometric degeneracy (zero
    /// area) is checked separately on load, see [`read_obj`].
    pub fn new(vertices: Vec<Vec3>, faces: Vec<[usize; 3]>) -> Result<Self> {
        let n = vertices.len();
        for (fi, f) in faces.iter().enumerate() {
            for &i in f {
                if i >= n {
                    return Err(Error::FaceIndexOutOfBounds {
                        face: fi,
                        index: i,
                        vertex_count: n,
                    });
                }
            }
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(Error::DegenerateFaceIndices {
                    face: fi,
                    indices: *f,
                });
            }
        }
        Ok(Mesh {
            vertices,
            faces,
            name: None,
        })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Same face list, new positions.
    pub fn with_vertices(&self, vertices: Vec<Vec3>) -> Result<Self> {
        if vertices.len() != self.vertices.len() {
            return Err(Error::ShapeMismatch {
                details: format!(
                    "expected {} vertices, got {}",
                    self.vertices.len(),
                    vertices.len()
                ),
            });
        }
        Ok(Mesh {
            vertices,
            faces: self.faces.clone(),
            name: self.name.clone(),
        })
    }

    /// Errors if any face has zero area. Registration gradients blow up on
    /// degenerate faces, so loaders reject them eagerly.
    pub fn require_nondegenerate(&self) -> Result<()> {
        for fi in 0..self.faces.len() {
            if self.face_area(fi) <= 1.0e-14 {
                return Err(Error::ZeroAreaFace { face: fi });
            }
        }
        Ok(())
    }

    pub fn bounding_box(&self) -> Result<Aabb> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyMesh);
        }
        let mut min = self.vertices[0];
        let mut max = self.vertices[0];
        for v in &self.vertices[1..] {
            min = min.inf(v);
            max = max.sup(v);
        }
        Ok(Aabb { min, max })
    }

    /// Unique undirected edges as (lo, hi) index pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| {
                [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])]
                    .into_iter()
                    .map(|(a, b)| (a.min(b), a.max(b)))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// Per-vertex neighbor lists (sorted, deduplicated).
    pub fn vertex_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn face_area(&self, fi: usize) -> f64 {
        let [a, b, c] = self.faces[fi];
        let e1 = self.vertices[b] - self.vertices[a];
        let e2 = self.vertices[c] - self.vertices[a];
        0.5 * e1.cross(&e2).norm()
    }

    pub fn total_area(&self) -> f64 {
        (0..self.faces.len()).map(|fi| self.face_area(fi)).sum()
    }

    /// Unit face normals from counter-clockwise winding. Errors on zero-area
    /// faces, naming the face index.
    pub fn face_normals(&self) -> Result<Vec<Vec3>> {
        self.faces
            .iter()
            .enumerate()
            .map(|(fi, &[a, b, c])| {
                let e1 = self.vertices[b] - self.vertices[a];
                let e2 = self.vertices[c] - self.vertices[a];
                let n = e1.cross(&e2);
                let len = n.norm();
                if len <= 1.0e-14 {
                    Err(Error::ZeroAreaFace { face: fi })
                } else {
                    Ok(n / len)
                }
            })
            .collect()
    }

    /// Area-weighted average of incident face normals, normalized.
    pub fn vertex_normals(&self) -> Result<Vec<Vec3>> {
        let mut acc = vec![Vec3::zeros(); self.vertices.len()];
        for (fi, &[a, b, c]) in self.faces.iter().enumerate() {
            let e1 = self.vertices[b] - self.vertices[a];
            let e2 = self.vertices[c] - self.vertices[a];
            let n = e1.cross(&e2); // length = 2 * area
            if n.norm() <= 2.0e-14 {
                return Err(Error::ZeroAreaFace { face: fi });
            }
            acc[a] += n;
            acc[b] += n;
            acc[c] += n;
        }
        Ok(acc
            .into_iter()
            .map(|n| {
                let len = n.norm();
                if len > 0.0 {
                    n / len
                } else {
                    Vec3::zeros()
                }
            })
            .collect())
    }

    /// A mesh is watertight when every undirected edge is shared by exactly
    /// two faces with opposite orientation.
    pub fn is_watertight(&self) -> bool {
        self.watertight_violation().is_none()
    }

    /// Returns a description of the first watertightness violation, if any.
    pub fn watertight_violation(&self) -> Option<String> {
        use std::collections::HashMap;
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &self.faces {
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
                *directed.entry((a, b)).or_insert(0) += 1;
            }
        }
        let mut keys: Vec<_> = directed.keys().copied().collect();
        keys.sort_unstable();
        for (a, b) in keys {
            let fwd = directed[&(a, b)];
            let rev = directed.get(&(b, a)).copied().unwrap_or(0);
            if fwd != 1 {
                return Some(format!("directed edge ({a}, {b}) used by {fwd} faces"));
            }
            if rev != 1 {
                return Some(format!(
                    "edge ({a}, {b}) has {fwd} forward and {rev} reverse uses"
                ));
            }
        }
        None
    }

    pub fn require_watertight(&self) -> Result<()> {
        match self.watertight_violation() {
            None => Ok(()),
            Some(reason) => Err(Error::NotWatertight { reason }),
        }
    }

    /// Area-weighted surface samples, deterministic per seed. Each point's
    /// randomness comes from its own counter-mode stream, so parallel and
    /// serial generation agree.
    pub fn sample_surface(&self, n_points: usize, seed: u64) -> Vec<SurfaceSample> {
        let cdf = self.area_cdf();
        (0..n_points)
            .map(|i| self.sample_surface_one(&cdf, seed, i as u64))
            .collect()
    }

    /// Cumulative face-area table for area-weighted face selection.
    pub fn area_cdf(&self) -> Vec<f64> {
        let mut cdf = Vec::with_capacity(self.faces.len());
        let mut acc = 0.0;
        for fi in 0..self.faces.len() {
            acc += self.face_area(fi);
            cdf.push(acc);
        }
        cdf
    }

    /// One surface sample from stream `index` of `seed`.
    pub fn sample_surface_one(&self, cdf: &[f64], seed: u64, index: u64) -> SurfaceSample {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let total = *cdf.last().expect("mesh has no faces");
        let t = rng.random::<f64>() * total;
        let fi = match cdf.binary_search_by(|x| x.partial_cmp(&t).unwrap()) {
            Ok(i) => i,
            Err(i) => i.min(cdf.len() - 1),
        };
        let [a, b, c] = self.faces[fi];
        // Uniform barycentric sampling via the square-root trick.
        let r1: f64 = rng.random();
        let r2: f64 = rng.random();
        let s = r1.sqrt();
        let (u, v) = (1.0 - s, s * (1.0 - r2));
        let w = 1.0 - u - v;
        SurfaceSample {
            position: u * self.vertices[a] + v * self.vertices[b] + w * self.vertices[c],
            face: fi,
        }
    }
}

/// A point on the mesh surface together with the face it came from.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceSample {
    pub position: Vec3,
    pub face: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_out_of_bounds_index() {
        let err = Mesh::new(vec![Vec3::zeros(); 2], vec![[0, 1, 2]]).unwrap_err();
        assert!(matches!(err, Error::FaceIndexOutOfBounds { index: 2, .. }));
    }

    #[test]
    fn rejects_repeated_indices() {
        let err = Mesh::new(vec![Vec3::zeros(); 3], vec![[0, 1, 1]]).unwrap_err();
        assert!(matches!(err, Error::DegenerateFaceIndices { .. }));
    }

    #[test]
    fn face_normal_of_ccw_triangle_in_xy_plane_is_plus_z() {
        let m = Mesh::new(
            vec![
                Vec3::new(0.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap();
        let n = m.face_normals().unwrap();
        assert_relative_eq!(n[0], Vec3::new(0.0, 0.0, 1.0), epsilon = 1e-15);
    }

    #[test]
    fn flipping_winding_negates_normal() {
        let verts = vec![
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
        ];
        let fwd = Mesh::new(verts.clone(), vec![[0, 1, 2]]).unwrap();
        let rev = Mesh::new(verts, vec![[0, 2, 1]]).unwrap();
        let nf = fwd.face_normals().unwrap()[0];
        let nr = rev.face_normals().unwrap()[0];
        assert_relative_eq!(nf, -nr, epsilon = 1e-15);
    }

    #[test]
    fn zero_area_face_errors_with_index() {
        let m = Mesh::new(
            vec![
                Vec3::new(0.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(2.0, 0.0, 0.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap();
        match m.face_normals() {
            Err(Error::ZeroAreaFace { face: 0 }) => {}
            other => panic!("expected ZeroAreaFace, got {other:?}"),
        }
    }

    #[test]
    fn icosphere_vertex_normals_are_radial() {
        let m = shapes::icosphere(3, 1.0);
        let normals = m.vertex_normals().unwrap();
        let mut max_deg: f64 = 0.0;
        for (v, n) in m.vertices().iter().zip(&normals) {
            let radial = v.normalize();
            let angle = radial.dot(n).clamp(-1.0, 1.0).acos().to_degrees();
            max_deg = max_deg.max(angle);
        }
        assert!(max_deg < 2.0, "max angular error {max_deg} deg");
    }

    #[test]
    fn watertight_detects_open_mesh() {
        let open = Mesh::new(
            vec![
                Vec3::new(0.0, 0.0, 0.0),
                Vec3::new(1.0, 0.0, 0.0),
                Vec3::new(0.0, 1.0, 0.0),
            ],
            vec![[0, 1, 2]],
        )
        .unwrap();
        assert!(!open.is_watertight());
        assert!(shapes::tetrahedron().is_watertight());
        assert!(shapes::icosphere(2, 0.5).is_watertight());
    }

    #[test]
    fn surface_samples_are_deterministic_and_on_surface() {
        let m = shapes::icosphere(2, 0.5);
        let s1 = m.sample_surface(100, 7);
        let s2 = m.sample_surface(100, 7);
        for (a, b) in s1.iter().zip(&s2) {
            assert_eq!(a.position, b.position);
            assert_eq!(a.face, b.face);
        }
        // Icosphere samples lie inside the sphere but close to it.
        for s in &s1 {
            let r = s.position.norm();
            assert!(r <= 0.5 + 1e-12 && r > 0.45, "r = {r}");
        }
    }
}
