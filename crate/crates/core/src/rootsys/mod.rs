//! Root-system combinatorics for the complex simple Lie algebras.

pub mod cartan;
pub mod partition;
pub mod roots;
pub mod wdd;

pub use cartan::{CartanType, ComplexReductiveType, Family};
pub use partition::{wdd_from_partition, Partition};
pub use roots::{build_root_system, Root, RootSystem};
pub use wdd::{
    dominant_representative, graded_dims, minimal_orbit_wdd, orbit_half_dim,
    wdd_from_characteristic, WeightedDynkinDiagram,
};
