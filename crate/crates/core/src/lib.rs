//! Substitution tilings with exact orientation bookkeeping: generation,
//! partition checks, orientation statistics, rotation-group balls, and the
//! hyperbolic binary tiling with its disk packings.

pub mod analysis;
pub mod catalog;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod hyperbolic;
pub mod io;
pub mod substitution;

pub use error::{Error, Result};
pub use exact::{BigRational, Dyadic, QuadFieldElement};
pub use geometry::{BinaryMap, Isometry2, Isometry3, OrientationKey2, RotationQuat};
pub use substitution::{
    expand, subdivide, Orientation, OrientationKind, Placement, Shape, SubstitutionSystem,
    TileInstance, Window,
};
