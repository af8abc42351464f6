use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::exact::{rational_from_str, rational_to_string, QuadFieldElement};
use crate::geometry::{OrientationKey2, RotationQuat};
use crate::hyperbolic::{BinaryTile, DiskCenter, Packing};
use crate::substitution::{Orientation, OrientationKind, SubstitutionSystem, TileInstance};

use super::fmt_f64;

/// Exact orientation fields; field-element coefficients are `num/den`
/// strings in the order 1, sqrt2, sqrt3, sqrt6.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OrientationRecord {
    Letter,
    Key2 {
        alpha_count: i32,
        turns: u8,
        turn_modulus: u8,
        reflected: bool,
    },
    Quat {
        w: [String; 4],
        x: [String; 4],
        y: [String; 4],
        z: [String; 4],
    },
}

impl OrientationRecord {
    pub fn from_orientation(o: &Orientation, kind: OrientationKind) -> Self {
        match (o, kind) {
            (_, OrientationKind::LetterOnly) => OrientationRecord::Letter,
            (Orientation::Planar(k), _) => OrientationRecord::Key2 {
                alpha_count: k.alpha_count,
                turns: k.turns,
                turn_modulus: k.turn_modulus,
                reflected: k.reflected,
            },
            (Orientation::Spatial(q), _) => {
                let [w, x, y, z] = q.components().map(|e| e.coefficients().map(rational_to_string));
                OrientationRecord::Quat { w, x, y, z }
            }
        }
    }

    /// The exact orientation, or `None` for letter-only records.
    pub fn to_orientation(&self) -> Result<Option<Orientation>> {
        match self {
            OrientationRecord::Letter => Ok(None),
            OrientationRecord::Key2 {
                alpha_count,
                turns,
                turn_modulus,
                reflected,
            } => {
                if *turn_modulus == 0 || turns >= turn_modulus {
                    return Err(Error::Parse(format!("bad turn field {turns}/{turn_modulus}")));
                }
                Ok(Some(Orientation::Planar(OrientationKey2::new(
                    *alpha_count,
                    *turns as i64,
                    *turn_modulus,
                    *reflected,
                ))))
            }
            OrientationRecord::Quat { w, x, y, z } => {
                let parse = |c: &[String; 4]| -> Result<QuadFieldElement> {
                    let r: Vec<_> = c
                        .iter()
                        .map(|s| rational_from_str(s).ok_or_else(|| Error::Parse(format!("bad rational `{s}`"))))
                        .collect::<Result<_>>()?;
                    let [a, b, c, d]: [_; 4] = r.try_into().expect("four coefficients");
                    Ok(QuadFieldElement::new(a, b, c, d))
                };
                let q = RotationQuat::new(parse(w)?, parse(x)?, parse(y)?, parse(z)?)?;
                Ok(Some(Orientation::Spatial(q)))
            }
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TileRecord {
    pub proto: usize,
    pub label: String,
    pub address: Vec<u8>,
    pub orientation: OrientationRecord,
    pub vertices: Vec<Vec<Box<RawValue>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TilesDocument {
    pub system: String,
    pub level: usize,
    pub tiles: Vec<TileRecord>,
}

fn raw(s: String) -> Box<RawValue> {
    RawValue::from_string(s).expect("formatted number is valid JSON")
}

pub fn tiles_json(system: &SubstitutionSystem, level: usize, tiles: &[TileInstance]) -> String {
    let dim = system.dimension;
    let doc = TilesDocument {
        system: system.name.clone(),
        level,
        tiles: tiles
            .iter()
            .map(|t| TileRecord {
                proto: t.prototile,
                label: system.prototiles[t.prototile].label.clone(),
                address: t.address.clone(),
                orientation: OrientationRecord::from_orientation(&t.orientation(), system.orientation_kind),
                vertices: t
                    .vertices(system)
                    .iter()
                    .map(|v| v[..dim].iter().map(|&c| raw(fmt_f64(c))).collect())
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable document") + "\n"
}

pub fn parse_tiles_json(text: &str) -> Result<TilesDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Serialize)]
struct TileRef {
    level: i32,
    index: i64,
    offset: i64,
}

impl From<&BinaryTile> for TileRef {
    fn from(t: &BinaryTile) -> Self {
        Self {
            level: t.level,
            index: t.index,
            offset: t.offset,
        }
    }
}

#[derive(Serialize)]
struct HyperTile {
    #[serde(flatten)]
    tile: TileRef,
    left: String,
    right: String,
    bottom: String,
    top: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
}

#[derive(Serialize)]
struct HyperCenter {
    x: String,
    y: String,
    source: TileRef,
}

#[derive(Serialize)]
struct HyperDocument {
    packing: &'static str,
    tiles: Vec<HyperTile>,
    centers: Vec<HyperCenter>,
    #[serde(skip_serializing_if = "Option::is_none")]
    outside: Option<usize>,
}

/// Tiles with exact boundaries, and optionally disk centers with per-tile counts.
pub fn hyperbolic_json(
    tiles: &[BinaryTile],
    packing: Option<(Packing, &[DiskCenter], &[usize], usize)>,
) -> String {
    let counts = packing.map(|p| p.2);
    let doc = HyperDocument {
        packing: match packing {
            None => "none",
            Some((Packing::Original, ..)) => "original",
            Some((Packing::Shifted, ..)) => "shifted",
        },
        tiles: tiles
            .iter()
            .enumerate()
            .map(|(i, t)| HyperTile {
                tile: t.into(),
                left: rational_to_string(&t.left().to_rational()),
                right: rational_to_string(&t.right().to_rational()),
                bottom: rational_to_string(&t.bottom().to_rational()),
                top: rational_to_string(&t.top().to_rational()),
                count: counts.map(|c| c[i]),
            })
            .collect(),
        centers: packing
            .map(|p| p.1)
            .unwrap_or(&[])
            .iter()
            .map(|c| HyperCenter {
                x: rational_to_string(&c.x),
                y: rational_to_string(&c.y),
                source: (&c.source).into(),
            })
            .collect(),
        outside: packing.map(|p| p.3),
    };
    serde_json::to_string_pretty(&doc).expect("serializable document") + "\n"
}
