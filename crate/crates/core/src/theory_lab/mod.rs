//! Constructions and checks for the structural results about the game.

pub mod context;
pub mod conventions;
pub mod enumerate;
pub mod fixtures;
pub mod hampath;
pub mod reduction;
pub mod sweeps;

pub use context::{check_context, distinguish, distinguishing_context, sum_profile, ContextCheck};
pub use conventions::{
    convention_best_moves, convention_comparison, convention_comparison_sum, misere_outcome,
    normal_outcome, Convention, ConventionReport, PlayerComparison,
};
pub use enumerate::{
    connected_graphs, enumerate_pt, enumerate_pt_negx, enumerate_ptx, random_pt,
    ENUMERATION_MAX_VERTICES,
};
pub use hampath::{hampath_oracle, hampath_with, HamPathMethod, ORACLE_MAX_VERTICES};
pub use reduction::{
    check_reduction, euler_bound_holds, grid_reduction, left_wins_first, reduce_from_hampath,
    reduction_check, GridReduction, ReductionCheck, ReductionOutput,
};
pub use sweeps::{
    check_distinguishing_contexts, check_no_n_positions, check_no_p_positions, check_outcome_table,
    check_self_sum_tie, find_class_witness, table_cell, verify_reduction, SweepConfig, SweepReport,
    Violation,
};
