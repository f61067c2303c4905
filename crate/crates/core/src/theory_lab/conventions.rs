//! The same position played under normal play (whoever cannot move loses)
//! and misère play (whoever cannot move wins), next to scoring play.

use std::collections::HashMap;
use std::fmt;

use crate::engine::{Move, Position};
use crate::error::{Error, Result};
use crate::graph_model::{Instance, Player};
use crate::score::Score;
use crate::solver::{Solver, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Normal,
    Misere,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Normal => "normal",
            Convention::Misere => "misere",
        })
    }
}

type Key = (Vec<usize>, Vec<usize>, u64, Player);

struct WinSearch {
    convention: Convention,
    memo: HashMap<Key, bool>,
    max_nodes: u64,
}

impl WinSearch {
    fn new(convention: Convention, config: SolverConfig) -> Self {
        WinSearch {
            convention,
            memo: HashMap::new(),
            max_nodes: config.max_nodes,
        }
    }

    /// Does the player to move win?
    fn wins<S: Score>(&mut self, pos: &Position<'_, S>) -> Result<bool> {
        let mut left = pos.ships(Player::Left).to_vec();
        let mut right = pos.ships(Player::Right).to_vec();
        left.sort_unstable();
        right.sort_unstable();
        let key = (left, right, pos.visited(), pos.to_move());
        if let Some(&w) = self.memo.get(&key) {
            return Ok(w);
        }
        if self.memo.len() as u64 >= self.max_nodes {
            return Err(Error::BudgetExceeded {
                limit: self.max_nodes,
            });
        }
        let moves = pos.legal_moves();
        let win = if moves.is_empty() {
            self.convention == Convention::Misere
        } else {
            let mut any = false;
            for m in &moves {
                if !self.wins(&pos.apply_move(m)?)? {
                    any = true;
                    break;
                }
            }
            any
        };
        self.memo.insert(key, win);
        Ok(win)
    }

    /// Winning moves, or every move when none wins.
    fn best_moves<S: Score>(&mut self, pos: &Position<'_, S>) -> Result<Vec<Move>> {
        let moves = pos.legal_moves();
        let mut winning = Vec::new();
        for m in &moves {
            if !self.wins(&pos.apply_move(m)?)? {
                winning.push(*m);
            }
        }
        Ok(if winning.is_empty() { moves } else { winning })
    }
}

fn winner<S: Score>(
    pos: &Position<'_, S>,
    convention: Convention,
    config: SolverConfig,
) -> Result<Player> {
    let mover = pos.to_move();
    let wins = WinSearch::new(convention, config).wins(pos)?;
    Ok(if wins { mover } else { mover.opponent() })
}

/// Winner under normal play: the player unable to move loses.
pub fn normal_outcome<S: Score>(pos: &Position<'_, S>, config: SolverConfig) -> Result<Player> {
    winner(pos, Convention::Normal, config)
}

/// Winner under misère play: the player unable to move wins.
pub fn misere_outcome<S: Score>(pos: &Position<'_, S>, config: SolverConfig) -> Result<Player> {
    winner(pos, Convention::Misere, config)
}

pub fn convention_best_moves<S: Score>(
    pos: &Position<'_, S>,
    convention: Convention,
    config: SolverConfig,
) -> Result<Vec<Move>> {
    WinSearch::new(convention, config).best_moves(pos)
}

/// One player moving first under the three conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayerComparison {
    pub player: Player,
    pub scoring_best_moves: Vec<Move>,
    pub normal_best_moves: Vec<Move>,
    pub misere_best_moves: Vec<Move>,
    pub normal_winner: Player,
    pub misere_winner: Player,
}

fn intersects(a: &[Move], b: &[Move]) -> bool {
    a.iter().any(|m| b.contains(m))
}

fn same_set(a: &[Move], b: &[Move]) -> bool {
    a.len() == b.len() && a.iter().all(|m| b.contains(m))
}

impl PlayerComparison {
    pub fn normal_agrees(&self) -> bool {
        intersects(&self.scoring_best_moves, &self.normal_best_moves)
    }

    pub fn misere_agrees(&self) -> bool {
        intersects(&self.scoring_best_moves, &self.misere_best_moves)
    }

    pub fn normal_identical(&self) -> bool {
        same_set(&self.scoring_best_moves, &self.normal_best_moves)
    }

    pub fn misere_identical(&self) -> bool {
        same_set(&self.scoring_best_moves, &self.misere_best_moves)
    }
}

/// Best first moves for each player under scoring, normal and misère play.
/// Agreement means the scoring set shares a move with the other set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionReport {
    pub left: PlayerComparison,
    pub right: PlayerComparison,
}

impl ConventionReport {
    pub fn player(&self, p: Player) -> &PlayerComparison {
        match p {
            Player::Left => &self.left,
            Player::Right => &self.right,
        }
    }
}

fn compare_for<S: Score>(
    inst: &Instance<S>,
    player: Player,
    config: SolverConfig,
) -> Result<PlayerComparison> {
    let pos = Position::initial(inst, player);
    let scoring_best_moves = Solver::new(inst, config)?.best_moves(&pos)?;
    let mut normal = WinSearch::new(Convention::Normal, config);
    let mut misere = WinSearch::new(Convention::Misere, config);
    let normal_winner = if normal.wins(&pos)? {
        player
    } else {
        player.opponent()
    };
    let misere_winner = if misere.wins(&pos)? {
        player
    } else {
        player.opponent()
    };
    Ok(PlayerComparison {
        player,
        scoring_best_moves,
        normal_best_moves: normal.best_moves(&pos)?,
        misere_best_moves: misere.best_moves(&pos)?,
        normal_winner,
        misere_winner,
    })
}

pub fn convention_comparison<S: Score>(
    inst: &Instance<S>,
    config: SolverConfig,
) -> Result<ConventionReport> {
    Ok(ConventionReport {
        left: compare_for(inst, Player::Left, config)?,
        right: compare_for(inst, Player::Right, config)?,
    })
}

/// Comparison on the sum of `parts`; moves refer to the vertices of the
/// disjoint union, numbered part by part.
pub fn convention_comparison_sum<S: Score>(
    parts: &[&Instance<S>],
    config: SolverConfig,
) -> Result<ConventionReport> {
    convention_comparison(&Instance::disjoint_union(parts)?, config)
}

fn move_list(moves: &[Move]) -> String {
    if moves.is_empty() {
        return "-".into();
    }
    moves
        .iter()
        .map(Move::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for ConventionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in [&self.left, &self.right] {
            writeln!(f, "{} first:", c.player)?;
            writeln!(f, "  scoring best: {}", move_list(&c.scoring_best_moves))?;
            writeln!(
                f,
                "  normal best:  {} (winner {})",
                move_list(&c.normal_best_moves),
                c.normal_winner
            )?;
            writeln!(
                f,
                "  misere best:  {} (winner {})",
                move_list(&c.misere_best_moves),
                c.misere_winner
            )?;
            writeln!(
                f,
                "  agree normal={} misere={} identical normal={} misere={}",
                c.normal_agrees(),
                c.misere_agrees(),
                c.normal_identical(),
                c.misere_identical()
            )?;
        }
        Ok(())
    }
}
