//! Midpoint (1-to-4) triangle subdivision with vertex provenance.

use super::Mesh;
use crate::error::Result;
use std::collections::BTreeMap;

/// Where each output vertex of a subdivision came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrigin {
    /// Copied from the input vertex with this index.
    Original(usize),
    /// Inserted at the midpoint of the input edge (lo, hi).
    Midpoint(usize, usize),
}

/// Per-output-vertex provenance, total by construction: every output vertex
/// is either an original vertex or maps to exactly one parent edge.
#[derive(Debug, Clone)]
pub struct SubdivisionMap {
    pub origins: Vec<VertexOrigin>,
}

/// Splits every triangle into four by inserting one vertex per unique edge at
/// its midpoint. Output counts: V' = V + E, F' = 4F. New vertices are
/// appended after the originals in sorted edge order, which keeps the output
/// deterministic.
pub fn subdivide_midpoint(mesh: &Mesh) -> Result<(Mesh, SubdivisionMap)> {
    let v_count = mesh.vertex_count();
    let mut vertices = mesh.vertices().to_vec();
    let mut origins: Vec<VertexOrigin> = (0..v_count).map(VertexOrigin::Original).collect();

    let mut midpoint_index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (a, b) in mesh.edges() {
        let idx = vertices.len();
        vertices.push(0.5 * (mesh.vertices()[a] + mesh.vertices()[b]));
        origins.push(VertexOrigin::Midpoint(a, b));
        midpoint_index.insert((a, b), idx);
    }

    let mid = |a: usize, b: usize| midpoint_index[&(a.min(b), a.max(b))];
    let mut faces = Vec::with_capacity(mesh.face_count() * 4);
    for &[a, b, c] in mesh.faces() {
        let (mab, mbc, mca) = (mid(a, b), mid(b, c), mid(c, a));
        faces.push([a, mab, mca]);
        faces.push([b, mbc, mab]);
        faces.push([c, mca, mbc]);
        faces.push([mab, mbc, mca]);
    }

    let mut out = Mesh::new(vertices, faces)?;
    out.name = mesh.name.clone();
    Ok((out, SubdivisionMap { origins }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::shapes;
    use approx::assert_relative_eq;

    #[test]
    fn tetrahedron_counts() {
        let m = shapes::tetrahedron();
        let (s, map) = subdivide_midpoint(&m).unwrap();
        assert_eq!(s.vertex_count(), 10); // V + E = 4 + 6
        assert_eq!(s.face_count(), 16); // 4 F
        assert_eq!(map.origins.len(), 10);
    }

    #[test]
    fn midpoints_are_exact() {
        let m = shapes::icosphere(1, 0.7);
        let (s, map) = subdivide_midpoint(&m).unwrap();
        for (idx, origin) in map.origins.iter().enumerate() {
            match *origin {
                VertexOrigin::Original(i) => {
                    assert_eq!(s.vertices()[idx], m.vertices()[i]);
                }
                VertexOrigin::Midpoint(a, b) => {
                    let mid = 0.5 * (m.vertices()[a] + m.vertices()[b]);
                    assert_relative_eq!(s.vertices()[idx], mid, epsilon = 0.0);
                }
            }
        }
    }

    #[test]
    fn preserves_watertightness_and_euler_characteristic() {
        let m = shapes::icosphere(1, 1.0);
        let (s, _) = subdivide_midpoint(&m).unwrap();
        assert!(s.is_watertight());
        let chi_in = m.vertex_count() as i64 - m.edges().len() as i64 + m.face_count() as i64;
        let chi_out = s.vertex_count() as i64 - s.edges().len() as i64 + s.face_count() as i64;
        assert_eq!(chi_in, chi_out);
        assert_eq!(chi_out, 2); // sphere topology
    }

    #[test]
    fn winding_stays_outward() {
        let m = shapes::icosphere(0, 1.0);
        let (s, _) = subdivide_midpoint(&m).unwrap();
        for (fi, n) in s.face_normals().unwrap().iter().enumerate() {
            let [a, b, c] = s.faces()[fi];
            let centroid = (s.vertices()[a] + s.vertices()[b] + s.vertices()[c]) / 3.0;
            assert!(n.dot(&centroid) > 0.0, "face {fi} flipped inward");
        }
    }
}
