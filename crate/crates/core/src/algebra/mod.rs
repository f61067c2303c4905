//! Explicit scoring-game trees and their algebra: extraction from positions,
//! negation, disjunctive sums, tree identity and final scores.

mod extract;
mod sum;
mod tree;

pub use extract::{extract_tree, negate_instance};
pub use sum::{sum_report, sum_solve, FlatSum, SumPosition};
pub use tree::{negate_tree, parse_tree, sum_trees, tree_final_scores, tree_identical, GameTree};
