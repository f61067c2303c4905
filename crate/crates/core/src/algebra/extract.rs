use std::collections::HashMap;

use crate::algebra::GameTree;
use crate::engine::Position;
use crate::error::{Error, Result};
use crate::graph_model::{Instance, Player};
use crate::score::Score;
use crate::solver::SolverConfig;

type Key<S> = (Vec<usize>, Vec<usize>, u64, S);

struct Extractor<S> {
    memo: HashMap<Key<S>, GameTree<S>>,
    max_nodes: u64,
}

impl<S: Score> Extractor<S> {
    fn key(pos: &Position<'_, S>) -> Key<S> {
        let mut left = pos.ships(Player::Left).to_vec();
        let mut right = pos.ships(Player::Right).to_vec();
        left.sort_unstable();
        right.sort_unstable();
        (left, right, pos.visited(), pos.score().clone())
    }

    fn options(&mut self, pos: &Position<'_, S>, player: Player) -> Result<Vec<GameTree<S>>> {
        let mover = pos.with_to_move(player);
        mover
            .legal_moves()
            .iter()
            .map(|m| self.extract(&mover.apply_move(m)?))
            .collect()
    }

    fn extract(&mut self, pos: &Position<'_, S>) -> Result<GameTree<S>> {
        let key = Self::key(pos);
        if let Some(tree) = self.memo.get(&key) {
            return Ok(tree.clone());
        }
        let left = self.options(pos, Player::Left)?;
        let right = self.options(pos, Player::Right)?;
        if self.memo.len() as u64 >= self.max_nodes {
            return Err(Error::BudgetExceeded {
                limit: self.max_nodes,
            });
        }
        let tree = GameTree::new(pos.score().clone(), left, right);
        self.memo.insert(key, tree.clone());
        Ok(tree)
    }
}

/// Full game tree of `pos`. Both players' options are generated at every
/// node; the player to move plays no role.
pub fn extract_tree<S: Score>(pos: &Position<'_, S>, config: SolverConfig) -> Result<GameTree<S>> {
    Extractor {
        memo: HashMap::new(),
        max_nodes: config.max_nodes,
    }
    .extract(pos)
}

/// `-G` at the game level: Left and Right ships exchanged, initial score negated.
pub fn negate_instance<S: Score>(inst: &Instance<S>) -> Instance<S> {
    inst.swap_players()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{negate_tree, parse_tree, tree_final_scores};
    use crate::graph_model::{parse_instance, Graph};
    use crate::solver::{final_scores, FinalScores};

    fn fig_ex() -> Instance<i64> {
        parse_instance(include_str!("../../../../fixtures/fig_ex.pt")).unwrap()
    }

    #[test]
    fn isolated_ship_is_zero() {
        let inst =
            Instance::with_weights(Graph::new(1, []).unwrap(), vec![0], vec![], |_| 1i64).unwrap();
        let tree = extract_tree(
            &Position::initial(&inst, Player::Left),
            SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(tree, GameTree::leaf(0));
        assert_eq!(tree.to_string(), "0");
    }

    #[test]
    fn single_edge_with_right_ship() {
        let inst =
            Instance::with_weights(Graph::path(2).unwrap(), vec![], vec![0], |_| 7i64).unwrap();
        let tree = extract_tree(
            &Position::initial(&inst, Player::Left),
            SolverConfig::default(),
        )
        .unwrap();
        assert!(tree.left_options().is_empty());
        assert_eq!(tree, parse_tree("{.|0|-7}").unwrap());
    }

    #[test]
    fn worked_example_tree_scores() {
        let inst = fig_ex();
        let tree = extract_tree(
            &Position::initial(&inst, Player::Right),
            SolverConfig::default(),
        )
        .unwrap();
        assert_eq!(tree_final_scores(&tree), FinalScores::new(2, 2));
    }

    #[test]
    fn negated_instance_extracts_negated_tree() {
        let inst = fig_ex().with_initial_score(3);
        let neg = negate_instance(&inst);
        let config = SolverConfig::default();
        let t = extract_tree(&Position::initial(&inst, Player::Left), config).unwrap();
        let nt = extract_tree(&Position::initial(&neg, Player::Left), config).unwrap();
        assert_eq!(nt, negate_tree(&t));
        assert_eq!(
            final_scores(&neg, config).unwrap(),
            FinalScores::new(-5, -5)
        );
        assert_eq!(negate_instance(&neg), inst);
    }

    #[test]
    fn extraction_budget() {
        let inst = fig_ex();
        let err = extract_tree(
            &Position::initial(&inst, Player::Left),
            SolverConfig { max_nodes: 5 },
        );
        assert_eq!(err.unwrap_err(), Error::BudgetExceeded { limit: 5 });
    }
}
