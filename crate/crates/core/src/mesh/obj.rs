//! Minimal ASCII OBJ reader/writer: `v x y z` and `f i j k` (1-based).
//! Other directives are ignored on read and never emitted. Vertex
//! coordinates are written with shortest round-trip formatting, so
//! write-then-read is bit-exact.

use super::Mesh;
use crate::error::{Error, Result};
use crate::Vec3;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

pub fn read_obj(path: &Path) -> Result<Mesh> {
    let display = path.display().to_string();
    let file = std::fs::File::open(path).map_err(|e| Error::io(&display, e))?;
    let mut vertices: Vec<Vec3> = Vec::new();
    let mut faces: Vec<[usize; 3]> = Vec::new();

    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(&display, e))?;
        let lineno = lineno + 1;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let mut coords = [0.0f64; 3];
                for c in &mut coords {
                    let tok = tokens.next().ok_or_else(|| {
                        Error::parse(&display, lineno, "vertex needs 3 coordinates")
                    })?;
                    *c = tok.parse().map_err(|_| {
                        Error::parse(&display, lineno, format!("bad coordinate {tok:?}"))
                    })?;
                }
                vertices.push(Vec3::new(coords[0], coords[1], coords[2]));
            }
            Some("f") => {
                let mut idx = [0usize; 3];
                for i in &mut idx {
                    let tok = tokens
                        .next()
                        .ok_or_else(|| Error::parse(&display, lineno, "face needs 3 indices"))?;
                    // Accept `i`, `i/t`, `i/t/n`, `i//n`; only the vertex index is used.
                    let vert = tok.split('/').next().unwrap_or(tok);
                    let one_based: usize = vert.parse().map_err(|_| {
                        Error::parse(&display, lineno, format!("bad face index {tok:?}"))
                    })?;
                    if one_based == 0 {
                        return Err(Error::parse(&display, lineno, "face indices are 1-based"));
                    }
                    *i = one_based - 1;
                }
                if tokens.next().is_some() {
                    return Err(Error::parse(
                        &display,
                        lineno,
                        "only triangle faces are supported",
                    ));
                }
                faces.push(idx);
            }
            _ => {} // comments and unsupported directives
        }
    }

    let mut mesh = Mesh::new(vertices, faces)?;
    // Degenerate faces are rejected at load time rather than silently
    // skipped; downstream gradients cannot handle them.
    mesh.require_nondegenerate()?;
    mesh.name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned());
    Ok(mesh)
}

pub fn write_obj(path: &Path, mesh: &Mesh) -> Result<()> {
    let display = path.display().to_string();
    let file = std::fs::File::create(path).map_err(|e| Error::io(&display, e))?;
    let mut w = BufWriter::new(file);
    let mut emit = |res: std::io::Result<()>| res.map_err(|e| Error::io(&display, e));
    for v in mesh.vertices() {
        emit(writeln!(w, "v {} {} {}", v.x, v.y, v.z))?;
    }
    for f in mesh.faces() {
        emit(writeln!(w, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1))?;
    }
    emit(w.flush())
}
