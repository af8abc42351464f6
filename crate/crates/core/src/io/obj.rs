use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::substitution::{Shape, SubstitutionSystem, TileInstance};

use super::fmt_f64;

/// Wavefront OBJ: vertices shared between prisms, one `g tile_<i>` group of
/// triangles per tile.
pub fn tiles_obj(system: &SubstitutionSystem, tiles: &[TileInstance]) -> Result<String> {
    if system.dimension != 3 {
        return Err(Error::FormatMismatch {
            format: "obj".into(),
            dimension: system.dimension,
        });
    }
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut vertex_lines = String::new();
    let mut faces = String::new();
    for (i, t) in tiles.iter().enumerate() {
        let n = match &system.prototiles[t.prototile].shape {
            Shape::Prism { base, .. } => base.len(),
            Shape::Polygon(_) => unreachable!("three-dimensional systems use prisms"),
        };
        let ids: Vec<usize> = t
            .vertices(system)
            .iter()
            .map(|v| {
                let line = format!("v {} {} {}\n", fmt_f64(v[0]), fmt_f64(v[1]), fmt_f64(v[2]));
                let next = index.len() + 1;
                *index.entry(line.clone()).or_insert_with(|| {
                    vertex_lines.push_str(&line);
                    next
                })
            })
            .collect();
        writeln!(faces, "g tile_{i}").expect("string write");
        let mut tri = |a: usize, b: usize, c: usize| {
            writeln!(faces, "f {} {} {}", ids[a], ids[b], ids[c]).expect("string write");
        };
        for k in 1..n - 1 {
            tri(0, k + 1, k);
            tri(n, n + k, n + k + 1);
        }
        for k in 0..n {
            let j = (k + 1) % n;
            tri(k, j, n + j);
            tri(k, n + j, n + k);
        }
    }
    let mut out = format!("# {} prisms: {}\n", system.name, tiles.len());
    out.push_str(&vertex_lines);
    out.push_str(&faces);
    Ok(out)
}
