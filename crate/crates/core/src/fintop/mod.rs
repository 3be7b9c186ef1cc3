//! Finite topological spaces and the structures that generate them.

pub mod closure;
pub mod enumerate;
pub mod format;
pub mod generate;
pub mod neighborhood;
pub mod order;
pub mod separation;
pub mod space;

pub use closure::{closure_interior, topology_from_closure, ClosureInterior, ClosureTable};
pub use enumerate::all_topologies;
pub use generate::{generate_topology, validate_base, BaseReport, Generator};
pub use neighborhood::{
    neighborhood_filter, open_neighborhood_base, topology_from_neighborhoods, FromNeighborhoods, NeighborhoodSystem,
};
pub use order::{specialization_order, topology_from_poset, Preorder};
pub use separation::{is_dense, separation_profile, SeparationProfile};
pub use space::{Carrier, FiniteSpace, SetFamily};
