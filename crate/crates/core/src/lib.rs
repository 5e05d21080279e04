//! Minimum sum edge coloring of multicycles, multipaths and bipartite
//! multigraphs.
//!
//! The crate provides
//!
//! * closed-form chromatic index and edge strength ([`strength`]);
//! * linear-time minimum sum solvers for multipaths ([`path`]) and
//!   multicycles ([`cycle`]);
//! * alternating-path recoloring that brings any proper coloring of a
//!   bipartite multigraph down to `Delta` colors without raising its sum
//!   ([`kempe`]);
//! * class-size cost models beyond the plain sum ([`costs`]);
//! * an exhaustive oracle for small instances ([`oracle`]);
//! * the line-oriented instance and coloring text formats ([`io`]).

pub mod coloring;
pub mod costs;
pub mod cycle;
pub mod error;
pub mod graph;
pub mod io;
pub mod kempe;
pub mod oracle;
pub mod path;
pub mod probe;
pub mod strength;

pub use coloring::{coloring_stats, ensure_proper, is_proper, Color, ColoringStats, EdgeColoring};
pub use costs::{check_property, evaluate, prefix_dominates, verify_robust, Cost, CostModel};
pub use cycle::{
    blocks, even_multicycle_color, multicycle_color, select_matching, sweep_color, Block, CaseTag,
    Selection,
};
pub use error::{Error, Result};
pub use graph::{
    split_residual, CycleResidual, EdgeId, Instance, Multicycle, Multigraph, Multipath, PathPiece,
    Topology,
};
pub use kempe::{alternating_path, reduce_bipartite, swap_path, uncolored_edge_identities};
pub use oracle::{oracle_min_cost, oracle_strength, OracleConfig, OracleResult};
pub use path::{multipath_color, odd_position_matching, Matching};
pub use probe::WorkCounter;
pub use strength::{
    chromatic_index_multicycle, edge_strength_bipartite, edge_strength_multicycle, is_bipartite,
    StrengthReport,
};
