//! Mesh-to-implicit-surface registration toolkit.
//!
//! The crate refines a fixed-topology triangle mesh against an occupancy
//! field by optimizing per-vertex offsets along the camera z-ray, keeping
//! the face list untouched. Alongside the implicit registration path it
//! provides the conventional Chamfer-distance baseline (marching cubes +
//! nearest point-to-triangle), occupancy sampling with the re-weighted BCE
//! loss, a Chebyshev graph-convolutional mesh autoencoder, and the usual
//! reconstruction metrics (P2S, Chamfer, normal projection error, MPVPE,
//! MPJPE).
//!
//! Modules:
//! - [`mesh`]: triangle mesh, uniform Laplacian, midpoint subdivision, OBJ I/O
//! - [`field`]: occupancy fields (analytic, grid, pixel-aligned), marching cubes
//! - [`sampling`]: inside test, mixture point sampling, extended BCE
//! - [`surface`]: BVH-accelerated exact point-to-triangle distance
//! - [`registration`]: implicit and Chamfer registration, timing comparison
//! - [`gcn`]: Chebyshev graph convolutions, mesh recovery losses, autoencoder
//! - [`metrics`]: reconstruction metrics and report assembly
//! - [`scene`]: synthetic scene generation (mesh + baked field + camera)

pub mod error;
pub mod field;
pub mod gcn;
pub mod mesh;
pub mod metrics;
pub mod registration;
pub mod sampling;
pub mod scene;
pub mod sh;
pub mod sparse;
pub mod surface;

pub use error::{Error, Result};

/// 3D vector/position type used throughout the crate.
pub type Vec3 = nalgebra::Vector3<f64>;
