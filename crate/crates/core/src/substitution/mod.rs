//! Substitution systems: representation, hierarchical expansion, counting
//! and the partition oracle.

mod expand;
mod matrix;
mod shape;
mod system;
mod verify;

pub use expand::{expand, locate, subdivide, tile_intersects, Window};
pub use matrix::{dominant_eigen, matrix_power_apply, substitution_matrix, type_counts};
pub use shape::Shape;
pub use system::{
    ChildPlacement, ExpansionRatio, Orientation, OrientationKind, Placement, Prototile,
    SubstitutionRule, SubstitutionSystem, TileInstance,
};
pub use verify::{verify_partition, PartitionReport};
