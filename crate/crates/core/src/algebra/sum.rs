use crate::algebra::{extract_tree, sum_trees, GameTree};
use crate::engine::Position;
use crate::error::{Error, Result};
use crate::graph_model::{Instance, Player};
use crate::score::Score;
use crate::solver::{solve, FinalScores, SolveReport, Solver, SolverConfig};

/// Several independent positions played as one game: the mover picks a
/// component where they can move, and the game ends when they can move in none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumPosition<'a, S> {
    pub components: Vec<Position<'a, S>>,
    pub to_move: Player,
}

/// A sum position laid out on the disjoint union of its component graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatSum<S> {
    pub instance: Instance<S>,
    /// Offset of each component's vertex ids in the union.
    pub offsets: Vec<usize>,
    left_ships: Vec<usize>,
    right_ships: Vec<usize>,
    visited: u64,
    score: S,
    to_move: Player,
}

impl<S: Score> FlatSum<S> {
    pub fn position(&self) -> Position<'_, S> {
        Position::from_parts(
            &self.instance,
            self.left_ships.clone(),
            self.right_ships.clone(),
            self.visited,
            self.score.clone(),
            self.to_move,
        )
        .expect("components were valid positions")
    }
}

impl<'a, S: Score> SumPosition<'a, S> {
    pub fn new(components: Vec<Position<'a, S>>, to_move: Player) -> Self {
        SumPosition {
            components,
            to_move,
        }
    }

    /// Initial positions of each instance.
    pub fn from_instances(instances: &[&'a Instance<S>], to_move: Player) -> Self {
        SumPosition {
            components: instances
                .iter()
                .map(|i| Position::initial(i, to_move))
                .collect(),
            to_move,
        }
    }

    /// Sum of component scores.
    pub fn score(&self) -> S {
        self.components
            .iter()
            .fold(S::zero(), |acc, p| acc + p.score().clone())
    }

    pub fn flatten(&self) -> Result<FlatSum<S>> {
        if self.components.is_empty() {
            return Err(Error::InvalidArgument("sum of no components".into()));
        }
        let parts: Vec<&Instance<S>> = self.components.iter().map(|p| p.instance()).collect();
        let instance = Instance::disjoint_union(&parts)?;
        let mut offsets = Vec::with_capacity(parts.len());
        let mut offset = 0;
        let mut left_ships = Vec::new();
        let mut right_ships = Vec::new();
        let mut visited = 0u64;
        for pos in &self.components {
            offsets.push(offset);
            left_ships.extend(pos.ships(Player::Left).iter().map(|v| v + offset));
            right_ships.extend(pos.ships(Player::Right).iter().map(|v| v + offset));
            visited |= pos.visited() << offset;
            offset += pos.instance().vertex_count();
        }
        Ok(FlatSum {
            instance,
            offsets,
            left_ships,
            right_ships,
            visited,
            score: self.score(),
            to_move: self.to_move,
        })
    }

    /// Fold of the component trees under the disjunctive sum.
    pub fn tree(&self, config: SolverConfig) -> Result<GameTree<S>> {
        let mut acc = GameTree::leaf(S::zero());
        for pos in &self.components {
            acc = sum_trees(&acc, &extract_tree(pos, config)?);
        }
        Ok(acc)
    }
}

/// Optimal final scores of a sum, searched directly on the combined state.
pub fn sum_solve<S: Score>(
    sp: &SumPosition<'_, S>,
    config: SolverConfig,
) -> Result<FinalScores<S>> {
    let flat = sp.flatten()?;
    let pos = flat.position();
    let mut solver = Solver::new(&flat.instance, config)?;
    let s_left = solver.final_score(&pos.with_to_move(Player::Left))?;
    let s_right = solver.final_score(&pos.with_to_move(Player::Right))?;
    Ok(FinalScores { s_left, s_right })
}

/// Full report for the sum of instances at their starts; move targets are
/// vertex ids of the disjoint union (see [`Instance::disjoint_union`]).
pub fn sum_report<S: Score>(
    instances: &[&Instance<S>],
    config: SolverConfig,
) -> Result<SolveReport<S>> {
    let union = Instance::disjoint_union(instances)?;
    solve(&union, config)
}
