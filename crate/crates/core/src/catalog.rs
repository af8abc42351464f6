//! The four Euclidean substitution systems, plus closed-form oracles.

use crate::error::{Error, Result};
use crate::exact::{rat, QuadFieldElement};
use crate::geometry::{Isometry2, Isometry3, OrientationKey2, RotationQuat};
use crate::substitution::{
    ChildPlacement, ExpansionRatio, OrientationKind, Placement, Prototile, Shape, SubstitutionRule,
    SubstitutionSystem,
};

/// Names accepted by [`system_by_name`].
pub const SYSTEM_NAMES: [&str; 4] = ["thue-morse", "pinwheel", "kite-dart", "quaquaversal"];

pub fn system_by_name(name: &str) -> Result<SubstitutionSystem> {
    match name {
        "thue-morse" => Ok(make_thue_morse()),
        "pinwheel" => Ok(make_pinwheel()),
        "kite-dart" => Ok(make_kite_dart()),
        "quaquaversal" => Ok(make_quaquaversal()),
        _ => Err(Error::UnknownSystem(name.to_string())),
    }
}

fn plane(key: OrientationKey2, t: [f64; 2]) -> Placement {
    Placement::Plane(Isometry2::new(key, t))
}

fn child(prototile: usize, placement: Placement) -> ChildPlacement {
    ChildPlacement {
        prototile,
        placement,
    }
}

/// Two unit squares `a` (id 0) and `b` (id 1); each becomes a 2x2 block,
/// `a -> [a b / b a]` read from the bottom row up, `b` the complement.
pub fn make_thue_morse() -> SubstitutionSystem {
    let square = || Shape::Polygon(vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
    let cells = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]];
    let rule = |parent: usize| SubstitutionRule {
        parent,
        children: cells
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                let same = i == 0 || i == 3;
                let letter = if same { parent } else { 1 - parent };
                child(letter, plane(OrientationKey2::quarter(0, 0, false), t))
            })
            .collect(),
    };
    SubstitutionSystem::new(
        "thue-morse",
        ExpansionRatio::new(2.0, "2"),
        vec![Prototile::new(0, "a", square()), Prototile::new(1, "b", square())],
        vec![rule(0), rule(1)],
        OrientationKind::LetterOnly,
    )
    .expect("thue-morse system is well formed")
}

/// Letter of cell `(i, j)` in a Thue-Morse supertile grown from `a`.
pub fn morse_label_at(i: u64, j: u64) -> char {
    if (i.count_ones() + j.count_ones()) % 2 == 0 {
        'a'
    } else {
        'b'
    }
}

/// The 1, 2, sqrt5 right triangle with vertices (0,0), (2,0), (2,1),
/// split into five copies scaled by 1/sqrt5.
pub fn make_pinwheel() -> SubstitutionSystem {
    let proto = Shape::Polygon(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0]]);
    // Drawn in the frame of the triangle (0,0), (5,0), (4,2), which `frame`
    // carries onto the scaled prototile.
    let frame = Isometry2::new(OrientationKey2::quarter(1, 0, true), [0.0, 0.0]);
    let drawn = [
        (OrientationKey2::quarter(0, 3, false), [4.0, 2.0]),
        (OrientationKey2::quarter(0, 0, false), [0.0, 0.0]),
        (OrientationKey2::quarter(0, 0, false), [2.0, 1.0]),
        (OrientationKey2::quarter(0, 2, true), [4.0, 0.0]),
        (OrientationKey2::quarter(0, 0, true), [2.0, 1.0]),
    ];
    let children = drawn
        .iter()
        .map(|&(key, t)| child(0, Placement::Plane(frame.compose(&Isometry2::new(key, t)))))
        .collect();
    SubstitutionSystem::new(
        "pinwheel",
        ExpansionRatio::new(5f64.sqrt(), "sqrt(5)"),
        vec![Prototile::new(0, "T", proto)],
        vec![SubstitutionRule {
            parent: 0,
            children,
        }],
        OrientationKind::Key2,
    )
    .expect("pinwheel system is well formed")
}

/// Kites and darts as half-tiles: the half-kite (id 0) is the (phi, phi, 1)
/// triangle, the half-dart (id 1) the (1, 1, phi) triangle, both with their
/// 36 degree corner at the origin. Orientations are tenth turns.
pub fn make_kite_dart() -> SubstitutionSystem {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let (c36, s36) = (36f64.to_radians().cos(), 36f64.to_radians().sin());
    let kite = Shape::Polygon(vec![[0.0, 0.0], [phi, 0.0], [phi * c36, phi * s36]]);
    let dart = Shape::Polygon(vec![[0.0, 0.0], [phi, 0.0], [c36, s36]]);
    let t = OrientationKey2::tenth;
    let kite_rule = SubstitutionRule {
        parent: 0,
        children: vec![
            child(0, plane(t(0, false), [0.0, 0.0])),
            child(0, plane(t(7, false), [phi * phi * c36, phi * phi * s36])),
            child(1, plane(t(2, false), [phi, 0.0])),
        ],
    };
    let dart_rule = SubstitutionRule {
        parent: 1,
        children: vec![
            child(0, plane(t(0, false), [0.0, 0.0])),
            child(1, plane(t(4, false), [phi * phi, 0.0])),
        ],
    };
    SubstitutionSystem::new(
        "kite-dart",
        ExpansionRatio::new(phi, "(1+sqrt(5))/2"),
        vec![
            Prototile::new(0, "half-kite", kite),
            Prototile::new(1, "half-dart", dart),
        ],
        vec![kite_rule, dart_rule],
        OrientationKind::Key2,
    )
    .expect("kite-dart system is well formed")
}

/// `a + b sqrt2 + c sqrt3` with each coefficient given as (num, den).
fn qf(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> QuadFieldElement {
    QuadFieldElement::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1), rat(0, 1))
}

fn quat(w: QuadFieldElement, x: QuadFieldElement, y: QuadFieldElement, z: QuadFieldElement) -> RotationQuat {
    RotationQuat::new(w, x, y, z).expect("unit quaternion")
}

/// The prism over the (1, sqrt3, 2) right triangle with unit height, cut
/// into eight half-size copies.
pub fn make_quaquaversal() -> SubstitutionSystem {
    let r3 = 3f64.sqrt();
    let proto = Shape::Prism {
        base: vec![[0.0, 0.0], [r3, 0.0], [0.0, 1.0]],
        height: 1.0,
    };
    let z = || qf((0, 1), (0, 1), (0, 1));
    let half = || qf((1, 2), (0, 1), (0, 1));
    let one = || qf((1, 1), (0, 1), (0, 1));
    let r3h = |s: i64| qf((0, 1), (0, 1), (s, 2));
    let r2h = |s: i64| qf((0, 1), (s, 2), (0, 1));
    let pieces = [
        (quat(z(), half(), r3h(-1), z()), [r3 / 2.0, 1.5, 1.0]),
        (quat(half(), z(), z(), r3h(-1)), [r3 / 2.0, 1.5, 0.0]),
        (quat(z(), z(), one(), z()), [r3, 0.0, 1.0]),
        (RotationQuat::identity(), [r3, 0.0, 0.0]),
        (RotationQuat::identity(), [r3, 0.0, 1.0]),
        (RotationQuat::identity(), [0.0, 1.0, 1.0]),
        (quat(r2h(1), r2h(1), z(), z()), [0.0, 1.0, 1.0]),
        (quat(z(), z(), r2h(1), r2h(-1)), [r3, 1.0, 2.0]),
    ];
    let children = pieces
        .into_iter()
        .map(|(q, t)| child(0, Placement::Space(Isometry3::new(q, t))))
        .collect();
    SubstitutionSystem::new(
        "quaquaversal",
        ExpansionRatio::new(2.0, "2"),
        vec![Prototile::new(0, "P", proto)],
        vec![SubstitutionRule {
            parent: 0,
            children,
        }],
        OrientationKind::Quat3,
    )
    .expect("quaquaversal system is well formed")
}
