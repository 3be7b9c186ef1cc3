//! Maps between finite spaces and the spaces built from them.

pub mod build;
pub mod map;
pub mod onepoint;

pub use build::{
    diagonal, final_topology, initial_topology, pair_label, product, quotient, subspace, sum, EquivalenceRelation,
    Product, Quotient,
};
pub use map::{is_continuous, is_continuous_on_subbase, is_homeomorphism, Continuity, PointMap};
pub use onepoint::one_point_extension;
