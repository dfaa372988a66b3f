//! Watertight primitive generators used by the synthetic scenes and tests.

use super::{subdivide_midpoint, Mesh};
use crate::sh::ShField;
use crate::Vec3;

/// Regular tetrahedron inscribed in the unit sphere, centered at the origin.
pub fn tetrahedron() -> Mesh {
    let s = 1.0 / 3.0f64.sqrt();
    let vertices = vec![
        Vec3::new(s, s, s),
        Vec3::new(s, -s, -s),
        Vec3::new(-s, s, -s),
        Vec3::new(-s, -s, s),
    ];
    let faces = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];
    Mesh::new(vertices, faces).expect("tetrahedron is valid")
}

/// Axis-aligned cube of the given side length, centered at the origin,
/// triangulated into 12 faces.
pub fn cube(side: f64) -> Mesh {
    let h = side * 0.5;
    let vertices = vec![
        Vec3::new(-h, -h, -h),
        Vec3::new(h, -h, -h),
        Vec3::new(h, h, -h),
        Vec3::new(-h, h, -h),
        Vec3::new(-h, -h, h),
        Vec3::new(h, -h, h),
        Vec3::new(h, h, h),
        Vec3::new(-h, h, h),
    ];
    let faces = vec![
        [0, 3, 2],
        [0, 2, 1], // bottom, -z
        [4, 5, 6],
        [4, 6, 7], // top, +z
        [0, 1, 5],
        [0, 5, 4], // -y
        [2, 3, 7],
        [2, 7, 6], // +y
        [0, 4, 7],
        [0, 7, 3], // -x
        [1, 2, 6],
        [1, 6, 5], // +x
    ];
    Mesh::new(vertices, faces).expect("cube is valid")
}

/// Regular octahedron inscribed in the unit sphere.
pub fn octahedron() -> Mesh {
    let vertices = vec![
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(-1.0, 0.0, 0.0),
        Vec3::new(0.0, 1.0, 0.0),
        Vec3::new(0.0, -1.0, 0.0),
        Vec3::new(0.0, 0.0, 1.0),
        Vec3::new(0.0, 0.0, -1.0),
    ];
    let faces = vec![
        [0, 2, 4],
        [2, 1, 4],
        [1, 3, 4],
        [3, 0, 4],
        [2, 0, 5],
        [1, 2, 5],
        [3, 1, 5],
        [0, 3, 5],
    ];
    Mesh::new(vertices, faces).expect("octahedron is valid")
}

/// Regular icosahedron inscribed in the unit sphere.
pub fn icosahedron() -> Mesh {
    let t = (1.0 + 5.0f64.sqrt()) / 2.0;
    let raw = [
        (-1.0, t, 0.0),
        (1.0, t, 0.0),
        (-1.0, -t, 0.0),
        (1.0, -t, 0.0),
        (0.0, -1.0, t),
        (0.0, 1.0, t),
        (0.0, -1.0, -t),
        (0.0, 1.0, -t),
        (t, 0.0, -1.0),
        (t, 0.0, 1.0),
        (-t, 0.0, -1.0),
        (-t, 0.0, 1.0),
    ];
    let vertices: Vec<Vec3> = raw
        .iter()
        .map(|&(x, y, z)| Vec3::new(x, y, z).normalize())
        .collect();
    let faces = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    Mesh::new(vertices, faces).expect("icosahedron is valid")
}

/// Icosphere: icosahedron subdivided `subdivisions` times with vertices
/// projected to the given radius. Vertex count is 10 * 4^s + 2.
pub fn icosphere(subdivisions: usize, radius: f64) -> Mesh {
    let mut mesh = icosahedron();
    for _ in 0..subdivisions {
        let (subdivided, _) = subdivide_midpoint(&mesh).expect("subdivision of valid mesh");
        mesh = subdivided;
    }
    let vertices = mesh
        .vertices()
        .iter()
        .map(|v| v.normalize() * radius)
        .collect();
    mesh.with_vertices(vertices).expect("same vertex count")
}

/// Axis-aligned ellipsoid: an icosphere scaled per axis.
pub fn ellipsoid(subdivisions: usize, semi_axes: Vec3) -> Mesh {
    let sphere = icosphere(subdivisions, 1.0);
    let vertices = sphere
        .vertices()
        .iter()
        .map(|v| Vec3::new(v.x * semi_axes.x, v.y * semi_axes.y, v.z * semi_axes.z))
        .collect();
    sphere.with_vertices(vertices).expect("same vertex count")
}

/// Icosphere with a smooth radial displacement field: radius becomes
/// `radius * (1 + field(dir))`. The field should stay well above -1.
pub fn bumpy_sphere(subdivisions: usize, radius: f64, field: &ShField) -> Mesh {
    let sphere = icosphere(subdivisions, 1.0);
    let vertices = sphere
        .vertices()
        .iter()
        .map(|v| {
            let dir = v.normalize();
            dir * radius * (1.0 + field.eval(&dir))
        })
        .collect();
    sphere.with_vertices(vertices).expect("same vertex count")
}

/// Closed tube swept along a polyline with fan caps: a crude articulated-body
/// proxy. `rings_per_segment` ring stations are placed on each segment and
/// frames are parallel-transported along the path, so mild bends stay
/// watertight.
pub fn tube_chain(
    path: &[Vec3],
    radius: f64,
    ring_vertices: usize,
    rings_per_segment: usize,
) -> Mesh {
    assert!(path.len() >= 2, "path needs at least two points");
    assert!(ring_vertices >= 3);
    assert!(rings_per_segment >= 1);

    // Sample stations along the path.
    let mut stations: Vec<Vec3> = vec![path[0]];
    for seg in path.windows(2) {
        for k in 1..=rings_per_segment {
            let t = k as f64 / rings_per_segment as f64;
            stations.push(seg[0] * (1.0 - t) + seg[1] * t);
        }
    }

    // Tangents by central differences; frames by parallel transport.
    let m = stations.len();
    let tangent = |i: usize| -> Vec3 {
        let a = if i == 0 { stations[0] } else { stations[i - 1] };
        let b = if i + 1 == m { stations[m - 1] } else { stations[i + 1] };
        (b - a).normalize()
    };
    let t0 = tangent(0);
    let mut normal = if t0.x.abs() < 0.9 {
        Vec3::new(1.0, 0.0, 0.0)
    } else {
        Vec3::new(0.0, 1.0, 0.0)
    };
    normal = (normal - t0 * normal.dot(&t0)).normalize();

    let mut vertices: Vec<Vec3> = Vec::with_capacity(m * ring_vertices + 2);
    let mut prev_t = t0;
    for i in 0..m {
        let t = tangent(i);
        // Transport the frame onto the new tangent plane.
        normal = (normal - t * normal.dot(&t)).normalize();
        let binormal = t.cross(&normal);
        for k in 0..ring_vertices {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / ring_vertices as f64;
            vertices.push(stations[i] + radius * (phi.cos() * normal + phi.sin() * binormal));
        }
        prev_t = t;
    }
    let _ = prev_t;

    let start_pole = vertices.len();
    vertices.push(stations[0] - tangent(0) * radius);
    let end_pole = vertices.len();
    vertices.push(stations[m - 1] + tangent(m - 1) * radius);

    let ring = |station: usize, k: usize| station * ring_vertices + (k % ring_vertices);
    let mut faces: Vec<[usize; 3]> = Vec::new();
    for i in 0..m - 1 {
        for k in 0..ring_vertices {
            let (a, b) = (ring(i, k), ring(i, k + 1));
            let (c, d) = (ring(i + 1, k), ring(i + 1, k + 1));
            faces.push([a, b, d]);
            faces.push([a, d, c]);
        }
    }
    for k in 0..ring_vertices {
        faces.push([start_pole, ring(0, k + 1), ring(0, k)]);
        faces.push([end_pole, ring(m - 1, k), ring(m - 1, k + 1)]);
    }

    let mut mesh = Mesh::new(vertices, faces).expect("tube chain indices are valid");
    // Normalize orientation to outward (positive enclosed volume).
    if signed_volume(&mesh) < 0.0 {
        let flipped = mesh.faces().iter().map(|&[a, b, c]| [a, c, b]).collect();
        mesh = Mesh::new(mesh.vertices().to_vec(), flipped).expect("flip preserves validity");
    }
    mesh
}

/// Signed enclosed volume via the divergence theorem; positive for outward
/// winding.
pub fn signed_volume(mesh: &Mesh) -> f64 {
    mesh.faces()
        .iter()
        .map(|&[a, b, c]| {
            let (va, vb, vc) = (mesh.vertices()[a], mesh.vertices()[b], mesh.vertices()[c]);
            va.dot(&vb.cross(&vc)) / 6.0
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitives_are_watertight_and_outward() {
        for (name, mesh) in [
            ("tetrahedron", tetrahedron()),
            ("cube", cube(1.0)),
            ("octahedron", octahedron()),
            ("icosahedron", icosahedron()),
            ("icosphere", icosphere(2, 0.5)),
            (
                "tube",
                tube_chain(
                    &[
                        Vec3::new(0.0, -0.4, 0.0),
                        Vec3::new(0.0, 0.0, 0.05),
                        Vec3::new(0.1, 0.35, 0.0),
                    ],
                    0.12,
                    16,
                    6,
                ),
            ),
        ] {
            assert!(mesh.is_watertight(), "{name} not watertight");
            assert!(signed_volume(&mesh) > 0.0, "{name} wound inward");
            mesh.require_nondegenerate()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn icosphere_counts_and_radius() {
        let m = icosphere(3, 0.5);
        assert_eq!(m.vertex_count(), 642); // 10 * 4^3 + 2
        assert_eq!(m.face_count(), 1280);
        for v in m.vertices() {
            assert!((v.norm() - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn cube_volume_is_exact() {
        let m = cube(2.0);
        assert!((signed_volume(&m) - 8.0).abs() < 1e-12);
    }

    #[test]
    fn bumpy_sphere_stays_watertight() {
        let field = ShField::random(8, 0.05, 42);
        let m = bumpy_sphere(3, 0.5, &field);
        assert!(m.is_watertight());
        assert!(signed_volume(&m) > 0.0);
    }
}
