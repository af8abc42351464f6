use crate::error::{Error, Result};
use crate::geometry::{Isometry2, Isometry3, OrientationKey2, RotationQuat};

use super::shape::Shape;

#[derive(Clone, Debug)]
pub struct Prototile {
    pub id: usize,
    pub label: String,
    pub shape: Shape,
    /// Center of the bounding ball.
    pub center: [f64; 3],
    /// Radius of the bounding ball about `center`.
    pub bounding_radius: f64,
}

impl Prototile {
    pub fn new(id: usize, label: impl Into<String>, shape: Shape) -> Self {
        let center = shape.center();
        let bounding_radius = shape.circumradius(center);
        Self {
            id,
            label: label.into(),
            shape,
            center,
            bounding_radius,
        }
    }
}

/// Exact orientation identity of a placed tile.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Planar(OrientationKey2),
    Spatial(RotationQuat),
}

impl Orientation {
    /// `self ∘ other`.
    pub fn compose(&self, other: &Orientation) -> Orientation {
        match (self, other) {
            (Orientation::Planar(a), Orientation::Planar(b)) => Orientation::Planar(a.compose(b)),
            (Orientation::Spatial(a), Orientation::Spatial(b)) => Orientation::Spatial(a.mul(b)),
            _ => panic!("cannot compose planar and spatial orientations"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Placement {
    Plane(Isometry2),
    Space(Isometry3),
}

impl Placement {
    pub fn compose(&self, other: &Placement) -> Placement {
        match (self, other) {
            (Placement::Plane(f), Placement::Plane(g)) => Placement::Plane(f.compose(g)),
            (Placement::Space(f), Placement::Space(g)) => Placement::Space(f.compose(g)),
            _ => panic!("cannot compose planar and spatial placements"),
        }
    }

    pub fn inverse(&self) -> Placement {
        match self {
            Placement::Plane(f) => Placement::Plane(f.inverse()),
            Placement::Space(f) => Placement::Space(f.inverse()),
        }
    }

    pub fn with_scaled_translation(&self, factor: f64) -> Placement {
        match self {
            Placement::Plane(f) => Placement::Plane(f.with_scaled_translation(factor)),
            Placement::Space(f) => Placement::Space(f.with_scaled_translation(factor)),
        }
    }

    /// Planar placements ignore (and return 0 for) the third coordinate.
    pub fn apply(&self, p: [f64; 3]) -> [f64; 3] {
        match self {
            Placement::Plane(f) => {
                let q = f.apply([p[0], p[1]]);
                [q[0], q[1], 0.0]
            }
            Placement::Space(f) => f.apply(p),
        }
    }

    pub fn orientation(&self) -> Orientation {
        match self {
            Placement::Plane(f) => Orientation::Planar(f.orientation),
            Placement::Space(f) => Orientation::Spatial(f.rotation().clone()),
        }
    }

    pub fn identity_like(&self) -> Placement {
        match self {
            Placement::Plane(f) => Placement::Plane(Isometry2::identity(f.orientation.turn_modulus)),
            Placement::Space(_) => Placement::Space(Isometry3::identity()),
        }
    }

    /// The same placement followed by a translation.
    pub fn translated(&self, delta: [f64; 3]) -> Placement {
        match self {
            Placement::Plane(f) => Placement::Plane(Isometry2::new(
                f.orientation,
                [f.translation[0] + delta[0], f.translation[1] + delta[1]],
            )),
            Placement::Space(f) => {
                let t = f.translation();
                Placement::Space(Isometry3::new(
                    f.rotation().clone(),
                    [t[0] + delta[0], t[1] + delta[1], t[2] + delta[2]],
                ))
            }
        }
    }

    pub fn translation(&self) -> [f64; 3] {
        match self {
            Placement::Plane(f) => [f.translation[0], f.translation[1], 0.0],
            Placement::Space(f) => f.translation(),
        }
    }
}

/// One child of a rule, placed inside the parent scaled up by the expansion
/// ratio (children are congruent to unit prototiles).
#[derive(Clone, Debug, PartialEq)]
pub struct ChildPlacement {
    pub prototile: usize,
    pub placement: Placement,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubstitutionRule {
    pub parent: usize,
    pub children: Vec<ChildPlacement>,
}

/// Linear inflation factor, with a human-readable exact form.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionRatio {
    pub value: f64,
    pub exact: String,
}

impl ExpansionRatio {
    pub fn new(value: f64, exact: impl Into<String>) -> Self {
        Self {
            value,
            exact: exact.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationKind {
    LetterOnly,
    Key2,
    Quat3,
}

#[derive(Clone, Debug)]
pub struct SubstitutionSystem {
    pub name: String,
    pub dimension: usize,
    pub ratio: ExpansionRatio,
    pub prototiles: Vec<Prototile>,
    pub rules: Vec<SubstitutionRule>,
    pub orientation_kind: OrientationKind,
}

impl SubstitutionSystem {
    pub fn new(
        name: impl Into<String>,
        ratio: ExpansionRatio,
        prototiles: Vec<Prototile>,
        rules: Vec<SubstitutionRule>,
        orientation_kind: OrientationKind,
    ) -> Result<Self> {
        let name = name.into();
        let bad = |m: String| Err(Error::InvalidSystem(format!("{name}: {m}")));
        if !(ratio.value > 1.0) {
            return bad(format!("expansion ratio {} must exceed 1", ratio.value));
        }
        if prototiles.is_empty() {
            return bad("no prototiles".into());
        }
        let dimension = prototiles[0].shape.dimension();
        for (i, p) in prototiles.iter().enumerate() {
            if p.id != i {
                return bad(format!("prototile at position {i} has id {}", p.id));
            }
            if p.shape.dimension() != dimension {
                return bad("prototiles of mixed dimension".into());
            }
            if !p.shape.is_convex_ccw() {
                return bad(format!("prototile {} is not convex and counter-clockwise", p.label));
            }
        }
        for p in &prototiles {
            let n = rules.iter().filter(|r| r.parent == p.id).count();
            if n != 1 {
                return bad(format!("prototile {} has {n} rules", p.label));
            }
        }
        for r in &rules {
            if r.parent >= prototiles.len() {
                return bad(format!("rule for unknown prototile {}", r.parent));
            }
            if r.children.is_empty() || r.children.len() > u8::MAX as usize {
                return bad(format!("rule for {} has {} children", r.parent, r.children.len()));
            }
            for c in &r.children {
                if c.prototile >= prototiles.len() {
                    return bad(format!("child references unknown prototile {}", c.prototile));
                }
                let ok = matches!(
                    (&c.placement, dimension),
                    (Placement::Plane(_), 2) | (Placement::Space(_), 3)
                );
                if !ok {
                    return bad("child placement dimension mismatch".into());
                }
            }
        }
        Ok(Self {
            name,
            dimension,
            ratio,
            prototiles,
            rules,
            orientation_kind,
        })
    }

    pub fn rule(&self, prototile: usize) -> Result<&SubstitutionRule> {
        self.rules
            .iter()
            .find(|r| r.parent == prototile)
            .ok_or(Error::MissingRule(prototile))
    }

    pub fn prototile(&self, id: usize) -> Result<&Prototile> {
        self.prototiles.get(id).ok_or(Error::MissingRule(id))
    }

    /// The identity placement in this system's dimension and turn granularity.
    pub fn identity_placement(&self) -> Placement {
        self.rules[0].children[0].placement.identity_like()
    }

    /// Root supertile of the given level, with leaves normalized to unit size.
    pub fn root(&self, prototile: usize, level: usize) -> TileInstance {
        TileInstance {
            prototile,
            placement: self.identity_placement(),
            address: Vec::new(),
            scale: self.ratio.value.powi(level as i32),
        }
    }
}

/// A placed (super)tile. `scale` is its linear size relative to a unit
/// prototile: 1 for leaves, `ratio^k` for a level-k supertile.
#[derive(Clone, Debug, PartialEq)]
pub struct TileInstance {
    pub prototile: usize,
    pub placement: Placement,
    pub address: Vec<u8>,
    pub scale: f64,
}

impl TileInstance {
    pub fn vertices(&self, system: &SubstitutionSystem) -> Vec<[f64; 3]> {
        let proto = &system.prototiles[self.prototile];
        proto
            .shape
            .vertices()
            .into_iter()
            .map(|v| self.placement.apply(v.map(|c| c * self.scale)))
            .collect()
    }

    pub fn orientation(&self) -> Orientation {
        self.placement.orientation()
    }
}
