use super::orientation::OrientationKey2;
use super::quat::{mat_vec, RotationQuat};

/// Rigid motion of the plane: exact orientation, double translation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry2 {
    pub orientation: OrientationKey2,
    pub translation: [f64; 2],
}

impl Isometry2 {
    pub fn new(orientation: OrientationKey2, translation: [f64; 2]) -> Self {
        Self {
            orientation,
            translation,
        }
    }

    pub fn identity(turn_modulus: u8) -> Self {
        Self::new(OrientationKey2::identity(turn_modulus), [0.0, 0.0])
    }

    pub fn translation(turn_modulus: u8, t: [f64; 2]) -> Self {
        Self::new(OrientationKey2::identity(turn_modulus), t)
    }

    pub fn linear(&self, p: [f64; 2]) -> [f64; 2] {
        let m = self.orientation.matrix();
        [
            m[0][0] * p[0] + m[0][1] * p[1],
            m[1][0] * p[0] + m[1][1] * p[1],
        ]
    }

    pub fn apply(&self, p: [f64; 2]) -> [f64; 2] {
        let q = self.linear(p);
        [q[0] + self.translation[0], q[1] + self.translation[1]]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let t = self.apply(other.translation);
        Self::new(self.orientation.compose(&other.orientation), t)
    }

    pub fn inverse(&self) -> Self {
        let inv = Self::new(self.orientation.inverse(), [0.0, 0.0]);
        let t = inv.linear(self.translation);
        Self::new(inv.orientation, [-t[0], -t[1]])
    }

    pub fn with_scaled_translation(&self, factor: f64) -> Self {
        Self::new(
            self.orientation,
            [self.translation[0] * factor, self.translation[1] * factor],
        )
    }
}

/// Rigid motion of space: exact rotation, double translation.
#[derive(Clone, Debug)]
pub struct Isometry3 {
    rotation: RotationQuat,
    translation: [f64; 3],
    matrix: [[f64; 3]; 3],
}

impl PartialEq for Isometry3 {
    fn eq(&self, other: &Self) -> bool {
        self.rotation == other.rotation && self.translation == other.translation
    }
}

impl Isometry3 {
    pub fn new(rotation: RotationQuat, translation: [f64; 3]) -> Self {
        let matrix = rotation.to_matrix();
        Self {
            rotation,
            translation,
            matrix,
        }
    }

    pub fn identity() -> Self {
        Self::new(RotationQuat::identity(), [0.0; 3])
    }

    pub fn rotation(&self) -> &RotationQuat {
        &self.rotation
    }

    pub fn translation(&self) -> [f64; 3] {
        self.translation
    }

    pub fn matrix(&self) -> &[[f64; 3]; 3] {
        &self.matrix
    }

    pub fn linear(&self, p: [f64; 3]) -> [f64; 3] {
        mat_vec(&self.matrix, p)
    }

    pub fn apply(&self, p: [f64; 3]) -> [f64; 3] {
        let q = self.linear(p);
        [
            q[0] + self.translation[0],
            q[1] + self.translation[1],
            q[2] + self.translation[2],
        ]
    }

    pub fn compose(&self, other: &Self) -> Self {
        let t = self.apply(other.translation);
        Self::new(self.rotation.mul(&other.rotation), t)
    }

    pub fn inverse(&self) -> Self {
        let rot = self.rotation.inverse();
        let m = rot.to_matrix();
        let t = mat_vec(&m, self.translation);
        Self {
            rotation: rot,
            translation: [-t[0], -t[1], -t[2]],
            matrix: m,
        }
    }

    pub fn with_scaled_translation(&self, factor: f64) -> Self {
        Self {
            rotation: self.rotation.clone(),
            translation: self.translation.map(|v| v * factor),
            matrix: self.matrix,
        }
    }
}
