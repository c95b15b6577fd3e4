//! Distance graphs and self 2-distance graphs on small vertex sets.
//!
//! Graphs hold at most 64 vertices as bitset adjacency rows. The crate
//! provides the `k`-distance operator, canonical labeling, isomorph-free
//! enumeration, pattern detection, Cayley graphs over small groups, graph6
//! interchange, and exhaustive re-checks of known classifications.

pub mod canon;
pub mod cayley;
pub mod distance;
pub mod enumerate;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_key, find_subgraph, CanonKey, CanonicalForm};
pub use cayley::{
    cayley_graph, distance_identity_check, product_set, ConnectionSet, DistanceIdentityReport, GroupError, GroupKind,
    GroupTable,
};
pub use distance::{
    distance_graph, edge_identity_report, is_self_two_distance, two_distance_graph, DistanceError,
    EdgeIdentityReport, SelfDistanceResult,
};
pub use enumerate::{
    enumerate_graphs, enumerate_map, search_self_two_distance, EnumerateError, EnumerationConfig,
    SearchCertificate, SearchFilter,
};
pub use generators::{named_graph, paley, prop23_construction, random_graph, GeneratorError, NamedGraph};
pub use graph::{ExtNat, Graph, GraphError, MetricsReport, MAX_VERTICES};
pub use graph6::Graph6Error;
pub use patterns::{pattern_report, triangle_provenance, PatternReport};
pub use verify::{
    conjecture_scan, srg_parameters, verify_classification, verify_no_cubic, Family, Nature, SrgParams, Status,
    VerificationReport,
};
