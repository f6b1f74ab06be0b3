//! Power graphs, enhanced power graphs, and reconstruction of the enhanced
//! power graph from the power graph alone.
//!
//! The power graph of a finite group joins two elements when one is a power
//! of the other; the enhanced power graph joins them when both lie in a
//! common cyclic subgroup. This crate builds both graphs from a group's
//! multiplication table, and — the interesting part — reconstructs the
//! enhanced power graph from the power graph *without* access to the group,
//! using closed-twin counts of vertices. Ground-truth constructions from
//! Cayley tables are kept alongside so the reconstruction can be verified
//! on a catalog of groups.

pub mod catalog;
pub mod cayley;
pub mod document;
pub mod dot;
pub mod graph;
pub mod group;
pub mod numtheory;
pub mod reconstruct;
pub mod twins;
pub mod verify;

pub use cayley::{parse_cayley_csv, CayleyError};
pub use graph::{enhanced_power_graph, power_graph, Graph, GraphError};
pub use group::{make_group, CyclicSubgroupPoset, FiniteGroup, GroupError, GroupSpec, MAX_ORDER};
pub use reconstruct::{
    decide_pair, difference_edges, difference_graph, difference_graph_from_power,
    reconstruct_enhanced, AddedEdge, DifferenceGraph, InputClass, ReconstructError,
    ReconstructionReport,
};
pub use twins::{
    check_monotonicity, closed_twins, formula_twin_counts, twin_counts, FormulaCounts,
    FormulaValue, MonotonicityViolation, TwinCounts, TwinError,
};

pub use catalog::{default_catalog, CatalogEntry};
pub use document::{DocumentError, GraphDocument};
pub use dot::to_dot;
pub use verify::{run_verify, CheckFailure, GroupReport, VerifyOptions, VerifyReport};
