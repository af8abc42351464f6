use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

/// The pinwheel angle `arctan(1/2)`, an irrational multiple of pi.
pub fn pinwheel_alpha() -> f64 {
    0.5f64.atan()
}

/// An element `R(theta) F^r` of O(2), with
/// `theta = alpha_count * arctan(1/2) + turns * 2pi / turn_modulus`
/// and `F` the reflection across the horizontal axis.
///
/// Because `arctan(1/2)` is an irrational multiple of pi, two keys with the
/// same modulus denote the same isometry exactly when all fields agree.
/// The pinwheel uses quarter turns (modulus 4); the kite and dart use tenth
/// turns (modulus 10) with `alpha_count` fixed at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrientationKey2 {
    pub alpha_count: i32,
    pub turns: u8,
    pub turn_modulus: u8,
    pub reflected: bool,
}

impl OrientationKey2 {
    pub fn new(alpha_count: i32, turns: i64, turn_modulus: u8, reflected: bool) -> Self {
        assert!(turn_modulus > 0, "turn modulus must be positive");
        Self {
            alpha_count,
            turns: turns.rem_euclid(turn_modulus as i64) as u8,
            turn_modulus,
            reflected,
        }
    }

    /// Key with quarter-turn granularity.
    pub fn quarter(alpha_count: i32, quarter_turns: i64, reflected: bool) -> Self {
        Self::new(alpha_count, quarter_turns, 4, reflected)
    }

    /// Key with pi/5 granularity.
    pub fn tenth(tenth_turns: i64, reflected: bool) -> Self {
        Self::new(0, tenth_turns, 10, reflected)
    }

    pub fn identity(turn_modulus: u8) -> Self {
        Self::new(0, 0, turn_modulus, false)
    }

    pub fn is_identity(&self) -> bool {
        self.alpha_count == 0 && self.turns == 0 && !self.reflected
    }

    /// `self ∘ other`: using `R(t)F = F R(-t)`,
    /// `R(t1)F^r1 R(t2)F^r2 = R(t1 + (-1)^r1 t2) F^(r1 xor r2)`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.turn_modulus, other.turn_modulus,
            "cannot compose keys with different turn granularity"
        );
        let s = if self.reflected { -1 } else { 1 };
        Self::new(
            self.alpha_count + s * other.alpha_count,
            self.turns as i64 + s as i64 * other.turns as i64,
            self.turn_modulus,
            self.reflected ^ other.reflected,
        )
    }

    pub fn inverse(&self) -> Self {
        if self.reflected {
            // reflections are involutions
            *self
        } else {
            Self::new(
                -self.alpha_count,
                -(self.turns as i64),
                self.turn_modulus,
                false,
            )
        }
    }

    pub fn angle(&self) -> f64 {
        self.alpha_count as f64 * pinwheel_alpha()
            + self.turns as f64 * 2.0 * PI / self.turn_modulus as f64
    }

    /// Row-major 2x2 matrix of `R(theta) F^r`.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        let (s, c) = self.angle().sin_cos();
        if self.reflected {
            [[c, s], [s, -c]]
        } else {
            [[c, -s], [s, c]]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_keys() -> Vec<OrientationKey2> {
        let mut v = Vec::new();
        for n in -3..=3 {
            for k in 0..4 {
                for r in [false, true] {
                    v.push(OrientationKey2::quarter(n, k, r));
                }
            }
        }
        v
    }

    fn mat_mul(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
        let mut m = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        m
    }

    fn close(a: [[f64; 2]; 2], b: [[f64; 2]; 2], tol: f64) -> bool {
        (0..2).all(|i| (0..2).all(|j| (a[i][j] - b[i][j]).abs() <= tol))
    }

    #[test]
    fn composition_examples() {
        let q = OrientationKey2::quarter;
        assert_eq!(q(1, 0, false).compose(&q(0, 1, false)), q(1, 1, false));
        assert_eq!(q(0, 0, true).compose(&q(1, 0, false)), q(-1, 0, true));
        assert_eq!(q(0, 2, false).compose(&q(0, 2, false)), q(0, 0, false));
    }

    #[test]
    fn group_laws_exhaustive() {
        let keys = all_keys();
        let id = OrientationKey2::identity(4);
        for f in &keys {
            assert_eq!(f.compose(&id), *f);
            assert_eq!(id.compose(f), *f);
            assert!(f.compose(&f.inverse()).is_identity());
            assert!(f.inverse().compose(f).is_identity());
            for g in &keys {
                for h in &keys {
                    assert_eq!(f.compose(g).compose(h), f.compose(&g.compose(h)));
                }
            }
        }
    }

    #[test]
    fn composition_matches_matrices() {
        let keys = all_keys();
        for f in &keys {
            for g in &keys {
                let exact = f.compose(g).matrix();
                assert!(close(exact, mat_mul(f.matrix(), g.matrix()), 1e-12));
            }
        }
    }

    #[test]
    fn keys_are_faithful() {
        // distinct keys never share a rotation matrix; equal keys always do
        let keys = all_keys();
        for (i, f) in keys.iter().enumerate() {
            for g in &keys[i + 1..] {
                assert!(!close(f.matrix(), g.matrix(), 1e-9), "{f:?} ~ {g:?}");
            }
        }
    }

    #[test]
    fn tenth_turns_wrap() {
        let a = OrientationKey2::tenth(7, false);
        let b = OrientationKey2::tenth(4, false);
        assert_eq!(a.compose(&b), OrientationKey2::tenth(1, false));
        assert_eq!(OrientationKey2::tenth(-1, true).turns, 9);
    }
}
