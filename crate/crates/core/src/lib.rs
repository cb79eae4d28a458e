//! Seeded generation and analysis of SDN evaluation scenarios.
//!
//! A scenario is a topology of one of three density classes (sparse,
//! partial mesh, full mesh), randomly drawn link quality attributes, and a
//! list of flow demands. Everything is derived from a single 64-bit seed and
//! can be exported as canonical JSON, a flat `R`/`F` record dataset, or a
//! Mininet deployment script. [`paths`] counts simple paths between node
//! pairs, the quantity that separates the three classes.

pub mod attributes;
pub mod dataset;
pub mod error;
pub mod generator;
pub mod paths;
pub mod rng;
pub mod scenario;
pub mod topology;
pub mod traffic;

pub use attributes::{
    assign_link_attributes, AttributeRanges, IntRange, LinkAttributes, QosRanges, RealRange,
};
pub use error::{Error, Result};
pub use generator::{generate_topology, random_spanning_tree, GeneratorConfig};
pub use paths::{
    count_simple_paths, path_count_matrix, summarize, PathCountMatrix, PathQuery, PathStats,
};
pub use scenario::{Scenario, ScenarioSpec};
pub use topology::{
    edge_count, validate_topology, Edge, NodeId, Topology, TopologyClass, ValidationReport,
    Violation,
};
pub use traffic::{generate_flows, Flow, FlowRanges, FlowRequirements};
