//! The binary tiling of the upper half-plane and the Böröczky packing.
//!
//! A tile of level `k` occupies `[left, left + 2^(k+1)] x [2^k, 2^(k+1)]`
//! and is the image of the primary tile `[0, 2] x [1, 2]` under
//! `z -> 2^k z + left`. Below any tile the strips are forced (each tile has
//! exactly two children); above, each tile is the left or the right half of
//! its parent, so the tiling is fixed by a sequence of such choices.

use std::collections::HashMap;

use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{rat, BigInt, BigRational, Dyadic};
use crate::geometry::BinaryMap;

/// A tile of level `level` with left edge `offset + 2^(level+1) * index`.
///
/// `offset` fixes where the tile grid of that strip sits. Strips at or below
/// the primary one share the grid through 0, so `offset` is 0 there; higher
/// strips may be shifted by an even integer, kept in `[0, 2^(level+1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryTile {
    pub level: i32,
    pub index: i64,
    pub offset: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    LeftChild,
    RightChild,
}

/// Entry `j` says whether ancestor `j` (0 = the primary tile) is the left or
/// right child of ancestor `j + 1`.
pub type ChoiceSequence = Vec<Choice>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Packing {
    Original,
    Shifted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskCenter {
    pub x: BigRational,
    pub y: BigRational,
    pub source: BinaryTile,
}

/// A window `[x0, x1] x [y0, y1]` of the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlaneWindow {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl HalfPlaneWindow {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        if !(y0 > 0.0) {
            return Err(Error::InvalidWindow(format!("lower edge y0 = {y0} must be positive")));
        }
        if !(x0 < x1 && y0 < y1) || !x1.is_finite() || !y1.is_finite() || !x0.is_finite() {
            return Err(Error::InvalidWindow(format!("[{x0}, {x1}] x [{y0}, {y1}] is empty")));
        }
        Ok(Self { x0, y0, x1, y1 })
    }

    /// Whether the tile lies in the closed window.
    pub fn contains_tile(&self, t: &BinaryTile) -> bool {
        let [x0, y0, x1, y1] = t.bounds();
        x0 >= self.x0 && x1 <= self.x1 && y0 >= self.y0 && y1 <= self.y1
    }
}

impl BinaryTile {
    pub const PRIMARY: BinaryTile = BinaryTile {
        level: 0,
        index: 0,
        offset: 0,
    };

    /// Tile in the unshifted grid of its strip.
    pub fn new(level: i32, index: i64) -> Self {
        Self {
            level,
            index,
            offset: 0,
        }
    }

    /// The tile of the given level whose left edge is `left`.
    pub fn with_left(level: i32, left: &Dyadic) -> Self {
        if level <= 0 {
            let index = left
                .mul_pow2(-(level as i64 + 1))
                .to_i64()
                .expect("left edge lies on the tile grid");
            return Self::new(level, index);
        }
        let width = 1i64 << (level + 1);
        let left = left.to_i64().expect("left edge lies on the tile grid");
        Self {
            level,
            index: left.div_euclid(width),
            offset: left.rem_euclid(width),
        }
    }

    pub fn width(&self) -> Dyadic {
        Dyadic::pow2(self.level as i64 + 1)
    }

    pub fn left(&self) -> Dyadic {
        &Dyadic::from_integer(self.offset) + &Dyadic::new(self.index.into(), self.level as i64 + 1)
    }

    pub fn right(&self) -> Dyadic {
        &self.left() + &self.width()
    }

    pub fn bottom(&self) -> Dyadic {
        Dyadic::pow2(self.level as i64)
    }

    pub fn top(&self) -> Dyadic {
        Dyadic::pow2(self.level as i64 + 1)
    }

    /// `[x0, y0, x1, y1]` in doubles.
    pub fn bounds(&self) -> [f64; 4] {
        [
            self.left().to_f64(),
            self.bottom().to_f64(),
            self.right().to_f64(),
            self.top().to_f64(),
        ]
    }

    /// The map carrying the primary tile onto this one.
    pub fn map(&self) -> BinaryMap {
        BinaryMap::new(self.level, self.left())
    }

    /// The two tiles of the strip below that span this tile.
    pub fn children(&self) -> (BinaryTile, BinaryTile) {
        let left = self.left();
        let mid = &left + &Dyadic::pow2(self.level as i64);
        (
            BinaryTile::with_left(self.level - 1, &left),
            BinaryTile::with_left(self.level - 1, &mid),
        )
    }

    /// The parent of which this tile is the given half.
    pub fn parent(&self, choice: Choice) -> BinaryTile {
        let left = match choice {
            Choice::LeftChild => self.left(),
            Choice::RightChild => &self.left() - &self.width(),
        };
        BinaryTile::with_left(self.level + 1, &left)
    }

    /// Half-open membership `[left, right) x [bottom, top)`, exact.
    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        let l = self.left().to_rational();
        let r = self.right().to_rational();
        let b = self.bottom().to_rational();
        let t = self.top().to_rational();
        &l <= x && x < &r && &b <= y && y < &t
    }
}

/// Hyperbolic area `∫∫ dx dy / y^2` of a tile; equal to 1 for every tile.
pub fn tile_area(t: &BinaryTile) -> f64 {
    let [x0, y0, x1, y1] = t.bounds();
    (x1 - x0) * (1.0 / y0 - 1.0 / y1)
}

/// The tiles of the tiling fixed by `choices` that overlap the window in a
/// set of positive area, ordered by level (top strip first), then left to right.
pub fn build_region(choices: &[Choice], window: &HalfPlaneWindow) -> Result<Vec<BinaryTile>> {
    let exact = |v: f64| Dyadic::from_f64(v).expect("finite window coordinate");
    let (x0, y0, x1, y1) = (exact(window.x0), exact(window.y0), exact(window.x1), exact(window.y1));
    let k_min = y0.floor_log2().expect("positive y0");
    let k_max = if y1.is_power_of_two() {
        y1.floor_log2().expect("positive y1") - 1
    } else {
        y1.floor_log2().expect("positive y1")
    };
    if k_max > choices.len() as i64 {
        return Err(Error::InsufficientChoices {
            required: k_max as usize,
            available: choices.len(),
        });
    }
    let mut ancestors = vec![BinaryTile::PRIMARY];
    for &c in choices.iter().take(k_max.max(0) as usize) {
        let top = *ancestors.last().expect("nonempty");
        ancestors.push(top.parent(c));
    }
    let mut tiles = Vec::new();
    for k in (k_min..=k_max).rev() {
        let grid = if k > 0 { ancestors[k as usize].offset } else { 0 };
        let off = Dyadic::from_integer(grid);
        let shift = -(k + 1);
        let first = (&x0 - &off).mul_pow2(shift).floor();
        let last = (&x1 - &off).mul_pow2(shift).ceil() - BigInt::one();
        let first = first.to_i64().ok_or_else(|| Error::InvalidWindow("window too wide".into()))?;
        let last = last.to_i64().ok_or_else(|| Error::InvalidWindow("window too wide".into()))?;
        for index in first..=last {
            tiles.push(BinaryTile {
                level: k as i32,
                index,
                offset: grid,
            });
        }
    }
    Ok(tiles)
}

/// One disk center per tile: the image of `1/2 + 7i/4` under the tile's
/// map, further multiplied by 6/5 in the shifted packing.
pub fn disk_centers(tiles: &[BinaryTile], packing: Packing) -> Vec<DiskCenter> {
    let (cx, cy) = (rat(1, 2), rat(7, 4));
    let factor = match packing {
        Packing::Original => BigRational::one(),
        Packing::Shifted => rat(6, 5),
    };
    tiles
        .iter()
        .map(|t| {
            let (x, y) = t.map().apply_exact(&cx, &cy);
            DiskCenter {
                x: x * &factor,
                y: y * &factor,
                source: *t,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterCounts {
    /// Count for each input tile, in input order.
    pub counts: Vec<usize>,
    /// Centers that fall in none of the tiles.
    pub outside: usize,
}

/// Assigns each center to the tile whose half-open region contains it.
pub fn count_centers_per_tile(tiles: &[BinaryTile], centers: &[DiskCenter]) -> CenterCounts {
    let lookup: HashMap<(i32, i64, i64), usize> = tiles
        .iter()
        .enumerate()
        .map(|(i, t)| ((t.level, t.offset, t.index), i))
        .collect();
    let mut grids: HashMap<i32, Vec<i64>> = HashMap::new();
    for t in tiles {
        let g = grids.entry(t.level).or_default();
        if !g.contains(&t.offset) {
            g.push(t.offset);
        }
    }
    let mut counts = vec![0; tiles.len()];
    let mut outside = 0;
    for c in centers {
        let hit = rational_floor_log2(&c.y).and_then(|k| {
            let k = i32::try_from(k).ok()?;
            grids.get(&k)?.iter().find_map(|&off| {
                let w = Dyadic::pow2(k as i64 + 1).to_rational();
                let m = ((&c.x - BigRational::from_integer(off.into())) / w).floor();
                let m = m.to_integer().to_i64()?;
                lookup.get(&(k, off, m)).copied()
            })
        });
        match hit {
            Some(i) => counts[i] += 1,
            None => outside += 1,
        }
    }
    CenterCounts { counts, outside }
}

/// `floor(log2(y))` for positive rational `y`.
fn rational_floor_log2(y: &BigRational) -> Option<i64> {
    if !y.is_positive() {
        return None;
    }
    let mut k = y.numer().bits() as i64 - y.denom().bits() as i64;
    let pow = |k: i64| Dyadic::pow2(k).to_rational();
    while &pow(k) > y {
        k -= 1;
    }
    while &pow(k + 1) <= y {
        k += 1;
    }
    Some(k)
}
