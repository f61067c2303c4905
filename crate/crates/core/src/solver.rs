//! Exact optimal play.
//!
//! Values are searched relative to the current score: the value of a state is
//! the score still to be gained from it under optimal play, so states reached
//! through different collection orders share one table entry. The table key
//! is (ship locations sorted per owner, visited set, player to move).

use std::collections::HashMap;
use std::fmt;

use crate::engine::{Move, Position};
use crate::error::{Error, Result};
use crate::graph_model::{bits, Instance, Player};
use crate::score::{Score, Sign};

/// Ships are packed 6 bits each into a `u128` search key.
pub const MAX_SEARCH_SHIPS: usize = 21;

const SHIP_BITS: u32 = 6;
const SHIP_MASK: u128 = (1 << SHIP_BITS) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Expansion budget; exceeding it is an error.
    pub max_nodes: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_nodes: 100_000_000,
        }
    }
}

/// Left final score (Left moves first) and Right final score (Right moves first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinalScores<S> {
    pub s_left: S,
    pub s_right: S,
}

impl<S: Score> FinalScores<S> {
    pub fn new(s_left: S, s_right: S) -> Self {
        FinalScores { s_left, s_right }
    }

    pub fn outcome(&self) -> OutcomeClass {
        classify(self)
    }

    pub fn signs(&self) -> SignProfile {
        SignProfile {
            left_first: Sign::of(&self.s_left),
            right_first: Sign::of(&self.s_right),
        }
    }

    /// Final scores of the negated game.
    pub fn negate(&self) -> Self {
        FinalScores {
            s_left: -self.s_right.clone(),
            s_right: -self.s_left.clone(),
        }
    }
}

/// Sign of each final score: the finest outcome notion (nine cells).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignProfile {
    pub left_first: Sign,
    pub right_first: Sign,
}

impl fmt::Display for SignProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{} R{}", self.left_first, self.right_first)
    }
}

/// The five outcome classes of scoring play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OutcomeClass {
    L,
    R,
    N,
    P,
    Tie,
}

impl OutcomeClass {
    pub const ALL: [OutcomeClass; 5] = [
        OutcomeClass::L,
        OutcomeClass::R,
        OutcomeClass::N,
        OutcomeClass::P,
        OutcomeClass::Tie,
    ];

    /// Class of the negated game.
    pub fn negate(self) -> OutcomeClass {
        match self {
            OutcomeClass::L => OutcomeClass::R,
            OutcomeClass::R => OutcomeClass::L,
            other => other,
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeClass::L => "L",
            OutcomeClass::R => "R",
            OutcomeClass::N => "N",
            OutcomeClass::P => "P",
            OutcomeClass::Tie => "TIE",
        })
    }
}

impl std::str::FromStr for OutcomeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(OutcomeClass::L),
            "R" => Ok(OutcomeClass::R),
            "N" => Ok(OutcomeClass::N),
            "P" => Ok(OutcomeClass::P),
            "TIE" | "ti" | "tie" => Ok(OutcomeClass::Tie),
            other => Err(Error::InvalidArgument(format!(
                "unknown outcome class `{other}`"
            ))),
        }
    }
}

/// Maps the signs of the two final scores onto an outcome class.
pub fn classify<S: Score>(scores: &FinalScores<S>) -> OutcomeClass {
    use Sign::*;
    let profile = scores.signs();
    match (profile.left_first, profile.right_first) {
        (Positive, Positive) | (Positive, Zero) | (Zero, Positive) => OutcomeClass::L,
        (Negative, Negative) | (Negative, Zero) | (Zero, Negative) => OutcomeClass::R,
        (Positive, Negative) => OutcomeClass::N,
        (Negative, Positive) => OutcomeClass::P,
        (Zero, Zero) => OutcomeClass::Tie,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport<S> {
    pub final_scores: FinalScores<S>,
    pub best_first_moves_left: Vec<Move>,
    pub best_first_moves_right: Vec<Move>,
    pub principal_variation_left: Vec<Move>,
    pub principal_variation_right: Vec<Move>,
    pub nodes_expanded: u64,
}

impl<S: Score> SolveReport<S> {
    pub fn outcome(&self) -> OutcomeClass {
        self.final_scores.outcome()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bound {
    Exact,
    Lower,
    Upper,
}

#[derive(Debug, Clone)]
struct Entry<S> {
    value: S,
    bound: Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    ships: u128,
    visited: u64,
}

/// Alpha-beta search with a transposition table over one instance.
pub struct Solver<'a, S> {
    instance: &'a Instance<S>,
    weights: Vec<S>,
    left_count: usize,
    right_count: usize,
    table: HashMap<(u128, u64, Player), Entry<S>>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a, S: Score> Solver<'a, S> {
    pub fn new(instance: &'a Instance<S>, config: SolverConfig) -> Result<Self> {
        if instance.ship_count() > MAX_SEARCH_SHIPS {
            return Err(Error::InvalidArgument(format!(
                "{} ships exceed the search limit of {MAX_SEARCH_SHIPS}",
                instance.ship_count()
            )));
        }
        Ok(Solver {
            instance,
            weights: instance
                .weights()
                .iter()
                .map(|w| w.clone().unwrap_or_else(S::zero))
                .collect(),
            left_count: instance.left_starts().len(),
            right_count: instance.right_starts().len(),
            table: HashMap::new(),
            nodes: 0,
            max_nodes: config.max_nodes,
        })
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.nodes
    }

    fn state_of(&self, pos: &Position<'_, S>) -> State {
        debug_assert!(
            std::ptr::eq(pos.instance(), self.instance) || pos.instance() == self.instance
        );
        let ships = pos
            .ships(Player::Left)
            .iter()
            .chain(pos.ships(Player::Right))
            .enumerate()
            .fold(0u128, |acc, (i, &v)| {
                acc | (v as u128) << (SHIP_BITS * i as u32)
            });
        State {
            ships,
            visited: pos.visited(),
        }
    }

    fn ship_at(ships: u128, slot: usize) -> usize {
        ((ships >> (SHIP_BITS * slot as u32)) & SHIP_MASK) as usize
    }

    fn slots(&self, player: Player) -> std::ops::Range<usize> {
        match player {
            Player::Left => 0..self.left_count,
            Player::Right => self.left_count..self.left_count + self.right_count,
        }
    }

    fn key(&self, state: State, to_move: Player) -> (u128, u64, Player) {
        if self.left_count <= 1 && self.right_count <= 1 {
            return (state.ships, state.visited, to_move);
        }
        let mut canonical = 0u128;
        let mut slot = 0;
        for player in [Player::Left, Player::Right] {
            let mut locs: Vec<usize> = self
                .slots(player)
                .map(|i| Self::ship_at(state.ships, i))
                .collect();
            locs.sort_unstable();
            for v in locs {
                canonical |= (v as u128) << (SHIP_BITS * slot);
                slot += 1;
            }
        }
        (canonical, state.visited, to_move)
    }

    /// (slot, target) pairs for `player`, ordered by slot then target.
    fn moves(&self, state: State, player: Player) -> Vec<(usize, usize)> {
        let graph = self.instance.graph();
        self.slots(player)
            .flat_map(|slot| {
                let at = Self::ship_at(state.ships, slot);
                bits(graph.neighbor_mask(at) & !state.visited).map(move |to| (slot, to))
            })
            .collect()
    }

    fn delta(&self, player: Player, to: usize) -> S {
        match player {
            Player::Left => self.weights[to].clone(),
            Player::Right => -self.weights[to].clone(),
        }
    }

    fn step(state: State, slot: usize, to: usize) -> State {
        let shift = SHIP_BITS * slot as u32;
        State {
            ships: (state.ships & !(SHIP_MASK << shift)) | (to as u128) << shift,
            visited: state.visited | 1 << to,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded {
                limit: self.max_nodes,
            });
        }
        Ok(())
    }

    /// Fail-soft alpha-beta on relative values; `None` bounds are infinite.
    fn search(
        &mut self,
        state: State,
        to_move: Player,
        alpha: Option<S>,
        beta: Option<S>,
    ) -> Result<S> {
        let key = self.key(state, to_move);
        if let Some(entry) = self.table.get(&key) {
            let usable = match entry.bound {
                Bound::Exact => true,
                Bound::Lower => beta.as_ref().is_some_and(|b| entry.value >= *b),
                Bound::Upper => alpha.as_ref().is_some_and(|a| entry.value <= *a),
            };
            if usable {
                return Ok(entry.value.clone());
            }
        }
        self.tick()?;
        let moves = self.moves(state, to_move);
        if moves.is_empty() {
            self.table.insert(
                key,
                Entry {
                    value: S::zero(),
                    bound: Bound::Exact,
                },
            );
            return Ok(S::zero());
        }
        let mut lo = alpha.clone();
        let mut hi = beta.clone();
        let mut best: Option<S> = None;
        for (slot, to) in moves {
            let delta = self.delta(to_move, to);
            let child_lo = lo.clone().map(|a| a - delta.clone());
            let child_hi = hi.clone().map(|b| b - delta.clone());
            let value = delta
                + self.search(
                    Self::step(state, slot, to),
                    to_move.opponent(),
                    child_lo,
                    child_hi,
                )?;
            match to_move {
                Player::Left => {
                    if best.as_ref().is_none_or(|b| value > *b) {
                        best = Some(value.clone());
                    }
                    if lo.as_ref().is_none_or(|a| value > *a) {
                        lo = Some(value);
                    }
                }
                Player::Right => {
                    if best.as_ref().is_none_or(|b| value < *b) {
                        best = Some(value.clone());
                    }
                    if hi.as_ref().is_none_or(|b| value < *b) {
                        hi = Some(value);
                    }
                }
            }
            if let (Some(a), Some(b)) = (&lo, &hi) {
                if a >= b {
                    break;
                }
            }
        }
        let best = best.expect("at least one move");
        let bound = if beta.as_ref().is_some_and(|b| best >= *b) {
            Bound::Lower
        } else if alpha.as_ref().is_some_and(|a| best <= *a) {
            Bound::Upper
        } else {
            Bound::Exact
        };
        self.table.insert(
            key,
            Entry {
                value: best.clone(),
                bound,
            },
        );
        Ok(best)
    }

    /// Optimal terminal score from `pos` with its player to move.
    pub fn final_score(&mut self, pos: &Position<'_, S>) -> Result<S> {
        let state = self.state_of(pos);
        Ok(pos.score().clone() + self.search(state, pos.to_move(), None, None)?)
    }

    /// Exact optimal terminal score after each legal move.
    pub fn move_values(&mut self, pos: &Position<'_, S>) -> Result<Vec<(Move, S)>> {
        pos.legal_moves()
            .into_iter()
            .map(|m| {
                let next = pos.apply_move(&m)?;
                Ok((m, self.final_score(&next)?))
            })
            .collect()
    }

    /// All moves achieving the final score, in (ship, target) order.
    pub fn best_moves(&mut self, pos: &Position<'_, S>) -> Result<Vec<Move>> {
        let values = self.move_values(pos)?;
        let best = match pos.to_move() {
            Player::Left => values.iter().map(|(_, v)| v).max(),
            Player::Right => values.iter().map(|(_, v)| v).min(),
        }
        .cloned();
        Ok(values
            .into_iter()
            .filter(|(_, v)| Some(v) == best.as_ref())
            .map(|(m, _)| m)
            .collect())
    }

    /// One optimal line to the end of the game, smallest (ship, target) first.
    pub fn principal_variation(&mut self, pos: &Position<'_, S>) -> Result<Vec<Move>> {
        let mut line = Vec::new();
        let mut current = pos.clone();
        while let Some(m) = self.best_moves(&current)?.into_iter().next() {
            current = current.apply_move(&m)?;
            line.push(m);
        }
        Ok(line)
    }
}

fn require_turn<S: Score>(pos: &Position<'_, S>, player: Player) -> Result<()> {
    if pos.to_move() != player {
        return Err(Error::InvalidArgument(format!(
            "expected {player} to move, found {}",
            pos.to_move()
        )));
    }
    Ok(())
}

/// Optimal terminal score with Left to move at `pos`.
pub fn left_final_score<S: Score>(pos: &Position<'_, S>) -> Result<S> {
    require_turn(pos, Player::Left)?;
    Solver::new(pos.instance(), SolverConfig::default())?.final_score(pos)
}

/// Optimal terminal score with Right to move at `pos`.
pub fn right_final_score<S: Score>(pos: &Position<'_, S>) -> Result<S> {
    require_turn(pos, Player::Right)?;
    Solver::new(pos.instance(), SolverConfig::default())?.final_score(pos)
}

/// Both final scores from the two root positions.
pub fn final_scores<S: Score>(inst: &Instance<S>, config: SolverConfig) -> Result<FinalScores<S>> {
    let mut solver = Solver::new(inst, config)?;
    let s_left = solver.final_score(&Position::initial(inst, Player::Left))?;
    let s_right = solver.final_score(&Position::initial(inst, Player::Right))?;
    Ok(FinalScores { s_left, s_right })
}

/// Final scores, best first moves and principal variations for both first movers.
pub fn solve<S: Score>(inst: &Instance<S>, config: SolverConfig) -> Result<SolveReport<S>> {
    let mut solver = Solver::new(inst, config)?;
    let left_root = Position::initial(inst, Player::Left);
    let right_root = Position::initial(inst, Player::Right);
    let s_left = solver.final_score(&left_root)?;
    let s_right = solver.final_score(&right_root)?;
    let best_first_moves_left = solver.best_moves(&left_root)?;
    let best_first_moves_right = solver.best_moves(&right_root)?;
    let principal_variation_left = solver.principal_variation(&left_root)?;
    let principal_variation_right = solver.principal_variation(&right_root)?;
    Ok(SolveReport {
        final_scores: FinalScores { s_left, s_right },
        best_first_moves_left,
        best_first_moves_right,
        principal_variation_left,
        principal_variation_right,
        nodes_expanded: solver.nodes_expanded(),
    })
}

struct Greedy<'s, 'a, S> {
    solver: &'s mut Solver<'a, S>,
    greedy: Player,
    memo: HashMap<(u128, u64, Player), S>,
}

impl<S: Score> Greedy<'_, '_, S> {
    fn value(&mut self, state: State, to_move: Player) -> Result<S> {
        let key = self.solver.key(state, to_move);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        self.solver.tick()?;
        let moves = self.solver.moves(state, to_move);
        let value = if moves.is_empty() {
            S::zero()
        } else if to_move == self.greedy {
            // heaviest target, lowest vertex id, then lowest ship
            let &(slot, to) = moves
                .iter()
                .min_by(|a, b| {
                    let wa = &self.solver.weights[a.1];
                    let wb = &self.solver.weights[b.1];
                    wb.cmp(wa).then(a.1.cmp(&b.1)).then(a.0.cmp(&b.0))
                })
                .expect("non-empty");
            self.solver.delta(to_move, to)
                + self.value(Solver::<S>::step(state, slot, to), to_move.opponent())?
        } else {
            let mut best: Option<S> = None;
            for (slot, to) in moves {
                let v = self.solver.delta(to_move, to)
                    + self.value(Solver::<S>::step(state, slot, to), to_move.opponent())?;
                let better = match (&best, to_move) {
                    (None, _) => true,
                    (Some(b), Player::Left) => v > *b,
                    (Some(b), Player::Right) => v < *b,
                };
                if better {
                    best = Some(v);
                }
            }
            best.expect("non-empty")
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

/// Terminal score when `greedy_player` always grabs the most valuable
/// neighbour and the opponent replies optimally.
pub fn greedy_score<S: Score>(
    inst: &Instance<S>,
    greedy_player: Player,
    first_player: Player,
    config: SolverConfig,
) -> Result<S> {
    let mut solver = Solver::new(inst, config)?;
    let root = Position::initial(inst, first_player);
    let state = solver.state_of(&root);
    let mut greedy = Greedy {
        solver: &mut solver,
        greedy: greedy_player,
        memo: HashMap::new(),
    };
    Ok(root.score().clone() + greedy.value(state, first_player)?)
}
