use rayon::prelude::*;

use crate::error::{Error, Result};

use super::shape::Shape;
use super::system::{Placement, SubstitutionSystem, TileInstance};

/// Closed axis-aligned box. Planar systems ignore the third axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub min: [f64; 3],
    pub max: [f64; 3],
}

impl Window {
    pub fn new(min: [f64; 3], max: [f64; 3]) -> Result<Self> {
        if (0..3).any(|i| !(min[i] <= max[i]) || !min[i].is_finite() || !max[i].is_finite()) {
            return Err(Error::InvalidWindow(format!("{min:?} .. {max:?}")));
        }
        Ok(Self { min, max })
    }

    pub fn planar(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::new([x0, y0, 0.0], [x1, y1, 0.0])
    }

    fn axes(&self, dimension: usize) -> std::ops::Range<usize> {
        0..dimension
    }

    /// Whether the closed ball meets the box (planar: the disc meets the rectangle).
    fn meets_ball(&self, dimension: usize, c: [f64; 3], r: f64) -> bool {
        let d2: f64 = self
            .axes(dimension)
            .map(|i| {
                let d = (self.min[i] - c[i]).max(0.0).max(c[i] - self.max[i]);
                d * d
            })
            .sum();
        d2 <= r * r
    }
}

/// Splits a tile into its children, normalized so the children are
/// `1/ratio` the size of the parent.
pub fn subdivide(tile: &TileInstance, system: &SubstitutionSystem) -> Result<Vec<TileInstance>> {
    let rule = system.rule(tile.prototile)?;
    let scale = tile.scale / system.ratio.value;
    Ok(rule
        .children
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut address = Vec::with_capacity(tile.address.len() + 1);
            address.extend_from_slice(&tile.address);
            address.push(i as u8);
            TileInstance {
                prototile: c.prototile,
                placement: tile.placement.compose(&c.placement.with_scaled_translation(scale)),
                address,
                scale,
            }
        })
        .collect())
}

/// All level-`level` descendants of a root supertile of the given prototile,
/// with leaves of unit size. With a window, exactly the leaves meeting it.
///
/// Output order is the lexicographic order of addresses and does not depend
/// on the number of worker threads.
pub fn expand(
    system: &SubstitutionSystem,
    root: usize,
    level: usize,
    window: Option<&Window>,
) -> Result<Vec<TileInstance>> {
    system.rule(root)?;
    let mut frontier = vec![system.root(root, level)];
    let keep = |t: &TileInstance| window.map_or(true, |w| may_meet(system, t, w));
    frontier.retain(keep);
    for _ in 0..level {
        frontier = frontier
            .par_iter()
            .map(|t| subdivide(t, system))
            .collect::<Result<Vec<_>>>()?
            .into_par_iter()
            .flatten()
            .filter(keep)
            .collect();
    }
    if let Some(w) = window {
        frontier.retain(|t| tile_intersects(system, t, w));
    }
    Ok(frontier)
}

/// Conservative test: the tile's bounding ball (with a little slack) meets the window.
fn may_meet(system: &SubstitutionSystem, tile: &TileInstance, window: &Window) -> bool {
    let proto = &system.prototiles[tile.prototile];
    let c = tile.placement.apply(proto.center.map(|v| v * tile.scale));
    let r = proto.bounding_radius * tile.scale * (1.0 + 1e-9) + 1e-9;
    window.meets_ball(system.dimension, c, r)
}

/// Exact closed intersection of a (convex) placed tile with the window,
/// by separating axes.
pub fn tile_intersects(system: &SubstitutionSystem, tile: &TileInstance, window: &Window) -> bool {
    let verts = tile.vertices(system);
    let dim = system.dimension;
    let mut axes: Vec<[f64; 3]> = Vec::new();
    for i in 0..dim {
        let mut e = [0.0; 3];
        e[i] = 1.0;
        axes.push(e);
    }
    let base = system.prototiles[tile.prototile].shape.base();
    let n = base.len();
    match &system.prototiles[tile.prototile].shape {
        Shape::Polygon(_) => {
            for i in 0..n {
                let a = verts[i];
                let b = verts[(i + 1) % n];
                axes.push([b[1] - a[1], a[0] - b[0], 0.0]);
            }
        }
        Shape::Prism { .. } => {
            let up = sub3(verts[n], verts[0]);
            let mut edges = vec![up];
            axes.push(up);
            for i in 0..n {
                let e = sub3(verts[(i + 1) % n], verts[i]);
                axes.push(cross3(e, up));
                edges.push(e);
            }
            for e in edges {
                for k in 0..3 {
                    let mut b = [0.0; 3];
                    b[k] = 1.0;
                    let c = cross3(e, b);
                    if c.iter().any(|v| v.abs() > 1e-15) {
                        axes.push(c);
                    }
                }
            }
        }
    }
    let corners = box_corners(window, dim);
    axes.iter().all(|ax| {
        let (a0, a1) = project(&verts, ax);
        let (b0, b1) = project(&corners, ax);
        a1 >= b0 && b1 >= a0
    })
}

fn box_corners(w: &Window, dim: usize) -> Vec<[f64; 3]> {
    let count = 1usize << dim;
    (0..count)
        .map(|m| {
            let mut p = [0.0; 3];
            for i in 0..dim {
                p[i] = if m >> i & 1 == 0 { w.min[i] } else { w.max[i] };
            }
            p
        })
        .collect()
}

fn project(points: &[[f64; 3]], axis: &[f64; 3]) -> (f64, f64) {
    points.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
        let d = p[0] * axis[0] + p[1] * axis[1] + p[2] * axis[2];
        (lo.min(d), hi.max(d))
    })
}

fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Recomputes a leaf placement by composing rule placements along an address.
pub fn locate(
    system: &SubstitutionSystem,
    root: usize,
    level: usize,
    address: &[u8],
) -> Result<TileInstance> {
    let mut tile = system.root(root, level);
    for &i in address {
        let rule = system.rule(tile.prototile)?;
        let child = rule
            .children
            .get(i as usize)
            .ok_or_else(|| Error::InvalidSystem(format!("address digit {i} out of range")))?;
        let scale = tile.scale / system.ratio.value;
        let placement: Placement = tile
            .placement
            .compose(&child.placement.with_scaled_translation(scale));
        tile.address.push(i);
        tile = TileInstance {
            prototile: child.prototile,
            placement,
            address: tile.address,
            scale,
        };
    }
    Ok(tile)
}
