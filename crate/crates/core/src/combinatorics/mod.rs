//! Partitions, signed Young diagrams and the theta lift on diagrams.

mod diagram;
mod pair;
mod partition;

pub use diagram::{
    enumerate_orbits, regular_holomorphic_orbit, theta_lift_diagram, validate_diagram, zero_orbit,
    Sign, SignedDiagram, SignedRow, Validation, Violation, DEFAULT_ENUMERATION_CAP,
};
pub use pair::{DualPair, GroupTag, PairKind};
pub use partition::{partitions_of, partitions_up_to, Partition};
