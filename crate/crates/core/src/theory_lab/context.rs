//! Contexts that tell games apart.
//!
//! Two games are equal when every context `X` gives `G + X` and `H + X` the
//! same outcome. That cannot be checked, but a single context with different
//! outcomes refutes it. Outcomes here are compared as sign profiles (the
//! sign of each final score), which is what the single-edge context changes.

use crate::engine::Position;
use crate::error::{Error, Result};
use crate::graph_model::{Graph, Instance, Player};
use crate::score::Score;
use crate::solver::{final_scores, FinalScores, SignProfile, SolverConfig};

/// A single edge `p1 - p2`: Right's ship on `p1`, and on `p2` more treasure
/// than Left could ever gain in `g`.
pub fn distinguishing_context<S: Score>(g: &Instance<S>) -> Result<Instance<S>> {
    if g.left_starts().is_empty() {
        return Err(Error::InvalidArgument("the game has no Left ship".into()));
    }
    if Position::initial(g, Player::Left).legal_moves().is_empty() {
        return Err(Error::InvalidArgument(
            "Left has no move in the game".into(),
        ));
    }
    let mut prize = S::one() + g.total_abs_weight();
    if g.initial_score().is_positive() {
        prize = prize + g.initial_score().clone();
    }
    let edge = Graph::path(2)?;
    Ok(Instance::new(
        edge,
        vec![None, Some(prize)],
        vec![],
        vec![0],
        S::zero(),
    )?)
}

/// Sign profile of `g + x`.
pub fn sum_profile<S: Score>(
    g: &Instance<S>,
    x: &Instance<S>,
    config: SolverConfig,
) -> Result<SignProfile> {
    let union = Instance::disjoint_union(&[g, x])?;
    Ok(final_scores(&union, config)?.signs())
}

/// First context in `pool` on which `g` and `h` differ.
pub fn distinguish<'p, S: Score>(
    g: &Instance<S>,
    h: &Instance<S>,
    pool: &'p [Instance<S>],
    config: SolverConfig,
) -> Result<Option<&'p Instance<S>>> {
    for x in pool {
        if sum_profile(g, x, config)? != sum_profile(h, x, config)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextCheck<S> {
    pub context: Instance<S>,
    pub context_scores: FinalScores<S>,
    pub sum_scores: FinalScores<S>,
}

impl<S: Score> ContextCheck<S> {
    /// Left moving first loses on `g + P` but not on `P` alone.
    pub fn holds(&self) -> bool {
        self.sum_scores.s_left.is_negative() && !self.context_scores.s_left.is_negative()
    }
}

pub fn check_context<S: Score>(g: &Instance<S>, config: SolverConfig) -> Result<ContextCheck<S>> {
    let context = distinguishing_context(g)?;
    let context_scores = final_scores(&context, config)?;
    let union = Instance::disjoint_union(&[g, &context])?;
    let sum_scores = final_scores(&union, config)?;
    Ok(ContextCheck {
        context,
        context_scores,
        sum_scores,
    })
}
