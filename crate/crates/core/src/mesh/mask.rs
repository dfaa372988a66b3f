//! Per-vertex optimizability flags.

use super::subdivide::{SubdivisionMap, VertexOrigin};
use crate::error::{Error, Result};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// One flag per vertex; `true` marks the vertex as optimizable. Used to
/// freeze regions (hands, feet, face on a body template) during
/// registration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMask {
    flags: Vec<bool>,
}

impl VertexMask {
    pub fn new(flags: Vec<bool>) -> Self {
        VertexMask { flags }
    }

    pub fn all_optimizable(vertex_count: usize) -> Self {
        VertexMask {
            flags: vec![true; vertex_count],
        }
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn is_optimizable(&self, vertex: usize) -> bool {
        self.flags[vertex]
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn optimizable_indices(&self) -> Vec<usize> {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(i, &f)| f.then_some(i))
            .collect()
    }

    pub fn check_length(&self, vertex_count: usize) -> Result<()> {
        if self.flags.len() != vertex_count {
            return Err(Error::ShapeMismatch {
                details: format!(
                    "mask has {} entries but mesh has {} vertices",
                    self.flags.len(),
                    vertex_count
                ),
            });
        }
        Ok(())
    }

    /// Propagates through a midpoint subdivision: a midpoint vertex is
    /// optimizable iff both edge endpoints are, so frozen-region boundaries
    /// never creep outward.
    pub fn propagate(&self, map: &SubdivisionMap) -> VertexMask {
        let flags = map
            .origins
            .iter()
            .map(|origin| match *origin {
                VertexOrigin::Original(i) => self.flags[i],
                VertexOrigin::Midpoint(a, b) => self.flags[a] && self.flags[b],
            })
            .collect();
        VertexMask { flags }
    }
}

/// Reads a mask file: one `0` or `1` per line.
pub fn read_mask(path: &Path) -> Result<VertexMask> {
    let display = path.display().to_string();
    let file = std::fs::File::open(path).map_err(|e| Error::io(&display, e))?;
    let mut flags = Vec::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(&display, e))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        match t {
            "0" => flags.push(false),
            "1" => flags.push(true),
            other => {
                return Err(Error::parse(
                    &display,
                    lineno + 1,
                    format!("expected 0 or 1, got {other:?}"),
                ))
            }
        }
    }
    Ok(VertexMask { flags })
}

pub fn write_mask(path: &Path, mask: &VertexMask) -> Result<()> {
    let display = path.display().to_string();
    let mut out = String::with_capacity(mask.len() * 2);
    for &f in &mask.flags {
        out.push(if f { '1' } else { '0' });
        out.push('\n');
    }
    let mut file = std::fs::File::create(path).map_err(|e| Error::io(&display, e))?;
    file.write_all(out.as_bytes())
        .map_err(|e| Error::io(&display, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{shapes, subdivide_midpoint};

    #[test]
    fn propagation_requires_both_endpoints() {
        let m = shapes::tetrahedron();
        let (_, map) = subdivide_midpoint(&m).unwrap();
        let mask = VertexMask::new(vec![true, true, false, false]);
        let out = mask.propagate(&map);
        assert_eq!(out.len(), 10);
        for (idx, origin) in map.origins.iter().enumerate() {
            match *origin {
                VertexOrigin::Original(i) => assert_eq!(out.is_optimizable(idx), i < 2),
                VertexOrigin::Midpoint(a, b) => {
                    assert_eq!(out.is_optimizable(idx), a < 2 && b < 2)
                }
            }
        }
    }

    #[test]
    fn file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mask.txt");
        let mask = VertexMask::new(vec![true, false, true, true]);
        write_mask(&path, &mask).unwrap();
        assert_eq!(read_mask(&path).unwrap(), mask);
    }

    #[test]
    fn rejects_garbage() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mask.txt");
        std::fs::write(&path, "1\n2\n").unwrap();
        match read_mask(&path) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected parse error at line 2, got {other:?}"),
        }
    }
}
