//! Isometries and exact orientation identities.
//!
//! Convention: isometries act on points from the left, and in
//! `compose(f, g)` the map `g` is applied first.

mod binary_map;
mod isometry;
mod orientation;
mod quat;

pub use binary_map::BinaryMap;
pub use isometry::{Isometry2, Isometry3};
pub use orientation::{pinwheel_alpha, OrientationKey2};
pub use quat::{Axis, RotationQuat};
