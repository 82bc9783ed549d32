//! Exact computation of the mutual, total, outer and dual mutual-visibility
//! numbers of graphs, with generators, explicit witnesses and closed-form
//! values for grids, tori and related families.
//!
//! ```
//! use mvis::{classify_set, solve, FamilySpec, SolveOptions, Variant};
//!
//! let g: mvis::Graph = "grid:4x3".parse::<FamilySpec>()?.generate()?;
//! let r = solve(&g, Variant::Dual, &SolveOptions::default())?;
//! assert_eq!(r.value, 5);
//! assert!(classify_set(&g, &r.witness).is_dual);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bitset;
pub mod edgelist;
pub mod families;
pub mod graph;
pub mod oracles;
pub mod solvers;
pub mod visibility;

pub use bitset::VertexSet;
pub use families::{FamilyError, FamilySpec};
pub use graph::{build_graph, cartesian_product, DistanceMatrix, Graph, GraphError, GraphStats};
pub use oracles::{comparison_table, oracle, Comparison, OracleKind, OracleValue};
pub use solvers::{
    solve, solve_independence, IndependenceResult, Method, SolveError, SolveOptions, SolveResult,
    SolveStats,
};
pub use visibility::{classify_set, satisfies, Variant, VisibilityReport};
