//! Exact computation of the k-adjacency dimension of finite simple graphs
//! under the truncated metric `d_t(x, y) = min(d(x, y), t)`.

pub mod cli;
pub mod error;
pub mod families;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod metric;
pub mod solver;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::{enumerate_family, verify_family_theorem, FamilyReport, FamilySpec};
pub use formulas::{
    adim2_upper_cone, cone_equality_criterion, cone_plus_one_criterion, formula_adim, join_bounds,
    join_equality_criterion, CriterionReport, Family, FormulaQuery,
};
pub use graph::{cone, disjoint_union, join, Distance, Graph, TwinKind, TwinPartition};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use metric::{
    cone_dimensionality, distinguishing_set, join_dimensionality, truncated_distance,
    DistinguishTable,
};
pub use solver::{
    adim, brute_force_adim, enumerate_bases, greedy_bound, is_k_generator, solve_adim,
    solve_adim_with, solve_dim, solve_table, SolveOptions, SolveResult, SolveStats,
};
pub use verify::{check_cone_conjecture, enumerate_all_graphs, sweep_theorem, Corpus, SweepReport};
pub use vertex_set::VertexSet;
