//! Finite pseudometric spaces, the relation chains and partitions that
//! generate them, and iterative solvers on real vectors.

pub mod chain;
pub mod format;
pub mod rank;
pub mod solve;
pub mod space;

pub use chain::{
    pseudometric_from_chain, uniformity_from_partitions, ChainPseudometric, Refinement, Relation, RelationChain,
    UniformityReport,
};
pub use format::{emit_matrix_csv, parse_chain, parse_matrix_csv, parse_ranks};
pub use rank::{ultrametric_from_rank, RankedSets};
pub use solve::{banach_fixed_point, pagerank, pagerank_from, FixedPoint, Norm, PageRank, StochasticMatrix};
pub use space::{
    bounded_transforms, dist_to_set, epsilon_net, hausdorff_distance, hausdorff_distance_by_thresholds,
    metric_quotient, topology_from_pmetric, weighted_product, BoundedTransforms, MetricQuotient, PMetricSpace,
};
