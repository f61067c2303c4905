//! Exact solver, scoring-game algebra and verification lab for
//! *Pirates and Treasure*, a scoring-play pursuit game on graphs.
//!
//! Everything numeric is generic over [`Score`], an exact ordered scalar.
//! The aliases at the crate root fix it to `i64`; the `Rational*` aliases use
//! `Ratio<i64>` for fractional treasure values.

pub mod algebra;
pub mod engine;
pub mod error;
pub mod graph_model;
pub mod score;
pub mod solver;
pub mod theory_lab;

pub use engine::{Move, ShipId};
pub use error::{Error, InstanceError, Result};
pub use graph_model::{Graph, Player};
pub use score::{Score, Sign};
pub use solver::{classify, OutcomeClass, SignProfile, SolverConfig};

pub type Rational = num_rational::Ratio<i64>;

pub type Instance = graph_model::Instance<i64>;
pub type Position<'a> = engine::Position<'a, i64>;
pub type FinalScores = solver::FinalScores<i64>;
pub type SolveReport = solver::SolveReport<i64>;
pub type GameTree = algebra::GameTree<i64>;
pub type SumPosition<'a> = algebra::SumPosition<'a, i64>;
pub type GridSpec = graph_model::GridSpec<i64>;

pub type RationalInstance = graph_model::Instance<Rational>;
pub type RationalFinalScores = solver::FinalScores<Rational>;
pub type RationalGameTree = algebra::GameTree<Rational>;
