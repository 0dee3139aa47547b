//! Apollonian networks and their spanning trees, in exact arithmetic.
//!
//! * [`graph`] builds `A(n)` by triangle subdivision or by gluing three copies
//!   of `A(n - 1)`, and exports edge lists, DOT and JSON.
//! * [`count`] runs the class-census recursion and the closed forms.
//! * [`entropy`] tabulates `ln(s_n) / V_n` against its limit `ln(15) / 2`.
//! * [`oracle`] and [`classify`] are independent checks: matrix-tree
//!   determinants and brute-force enumeration of spanning forests.
//! * [`verify`] bundles every cross-check into one report.

pub mod classify;
pub mod cli;
pub mod count;
pub mod entropy;
pub mod error;
pub mod fixed;
pub mod graph;
pub mod oracle;
pub mod verify;

pub use classify::{classify_exhaustive, ClassifiedCensus, SubgraphClass};
pub use count::{
    census_chain, census_seed, census_step, closed_a, closed_b, closed_c, closed_s,
    spanning_tree_count, ClassCensus, CountMethod, FactoredCount,
};
pub use entropy::{entropy_comparison, entropy_table, EntropyRow, EntropyTable};
pub use error::{Error, Result};
pub use graph::{build_iterative, build_merged, order_size, ApollonianGraph, ExportFormat, Step};
pub use oracle::{c_count_oracle, rooted_forest_count, tree_count_kirchhoff, LaplacianMinor};
