//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("face {face} references vertex {index} but mesh has {vertex_count} vertices")]
    FaceIndexOutOfBounds {
        face: usize,
        index: usize,
        vertex_count: usize,
    },

    #[error("face {face} has repeated vertex indices {indices:?}")]
    DegenerateFaceIndices { face: usize, indices: [usize; 3] },

    #[error("face {face} has zero area")]
    ZeroAreaFace { face: usize },

    #[error("vertex {vertex} is isolated (degree 0)")]
    IsolatedVertex { vertex: usize },

    #[error("mesh is not watertight: {reason}")]
    NotWatertight { reason: String },

    #[error("mesh is empty")]
    EmptyMesh,

    #[error("marching cubes produced an empty mesh (no iso crossing)")]
    EmptyLevelSet,

    #[error("topology mismatch: {details}")]
    TopologyMismatch { details: String },

    #[error("shape mismatch: {details}")]
    ShapeMismatch { details: String },

    #[error("predicted edge ({i}, {j}) has zero length")]
    ZeroLengthEdge { i: usize, j: usize },

    #[error("non-finite loss at iteration {iteration}: total={total} sdf={sdf} laplacian={laplacian} offset={offset}")]
    NonFiniteLoss {
        iteration: usize,
        total: f64,
        sdf: f64,
        laplacian: f64,
        offset: f64,
    },

    #[error("training diverged at epoch {epoch}: loss={loss}")]
    TrainingDiverged { epoch: usize, loss: f64 },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("perspective projection requires camera-space z > 0 (got z = {z})")]
    BehindCamera { z: f64 },

    #[error("camera rotation is not orthonormal (max deviation {deviation:.3e})")]
    InvalidRotation { deviation: f64 },

    #[error("foreground masks do not intersect; nothing to compare")]
    EmptyMaskIntersection,

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    FileFormat { path: String, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(path: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}
