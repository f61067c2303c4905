//! Positions, legal moves and move application.
//!
//! A ship moves to an adjacent vertex nobody has visited yet and collects its
//! treasure. The game ends as soon as the player to move has no such move,
//! whatever the opponent could still do.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph_model::{bits, Instance, Player};
use crate::score::{signed, Score};

/// A ship: its owner and its index among that owner's starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShipId {
    pub owner: Player,
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub ship: ShipId,
    pub to: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}->{}",
            self.ship.owner.letter(),
            self.ship.index,
            self.to
        )
    }
}

/// A node of the game tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position<'a, S> {
    instance: &'a Instance<S>,
    left_ships: Vec<usize>,
    right_ships: Vec<usize>,
    visited: u64,
    score: S,
    to_move: Player,
}

impl<'a, S: Score> Position<'a, S> {
    /// Ships on their starts, starts visited, score at the instance's initial score.
    pub fn initial(instance: &'a Instance<S>, first_player: Player) -> Self {
        Position {
            instance,
            left_ships: instance.left_starts().to_vec(),
            right_ships: instance.right_starts().to_vec(),
            visited: instance.start_mask(),
            score: instance.initial_score().clone(),
            to_move: first_player,
        }
    }

    /// Assembles an arbitrary position. Every ship must stand on a visited
    /// vertex and every start must be visited.
    pub fn from_parts(
        instance: &'a Instance<S>,
        left_ships: Vec<usize>,
        right_ships: Vec<usize>,
        visited: u64,
        score: S,
        to_move: Player,
    ) -> Result<Self> {
        if left_ships.len() != instance.left_starts().len()
            || right_ships.len() != instance.right_starts().len()
        {
            return Err(Error::InvalidArgument(
                "ship count does not match instance".into(),
            ));
        }
        if visited & !instance.graph().all_vertices_mask() != 0 {
            return Err(Error::InvalidArgument(
                "visited set outside the graph".into(),
            ));
        }
        if instance.start_mask() & !visited != 0 {
            return Err(Error::InvalidArgument(
                "start vertices must be visited".into(),
            ));
        }
        for &v in left_ships.iter().chain(&right_ships) {
            if v >= instance.vertex_count() || visited & (1 << v) == 0 {
                return Err(Error::InvalidArgument(format!(
                    "ship on unvisited vertex {v}"
                )));
            }
        }
        Ok(Position {
            instance,
            left_ships,
            right_ships,
            visited,
            score,
            to_move,
        })
    }

    pub fn instance(&self) -> &'a Instance<S> {
        self.instance
    }

    pub fn score(&self) -> &S {
        &self.score
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn visited(&self) -> u64 {
        self.visited
    }

    pub fn ships(&self, owner: Player) -> &[usize] {
        match owner {
            Player::Left => &self.left_ships,
            Player::Right => &self.right_ships,
        }
    }

    pub fn ship_location(&self, ship: ShipId) -> Option<usize> {
        self.ships(ship.owner).get(ship.index).copied()
    }

    /// The same position with `player` to move.
    pub fn with_to_move(&self, player: Player) -> Self {
        Position {
            to_move: player,
            ..self.clone()
        }
    }

    /// Moves available to `player` here, ordered by (ship, target).
    pub fn moves_for(&self, player: Player) -> Vec<Move> {
        let graph = self.instance.graph();
        self.ships(player)
            .iter()
            .enumerate()
            .flat_map(|(index, &at)| {
                bits(graph.neighbor_mask(at) & !self.visited).map(move |to| Move {
                    ship: ShipId {
                        owner: player,
                        index,
                    },
                    to,
                })
            })
            .collect()
    }

    pub fn legal_moves(&self) -> Vec<Move> {
        self.moves_for(self.to_move)
    }

    pub fn is_terminal(&self) -> bool {
        let graph = self.instance.graph();
        self.ships(self.to_move)
            .iter()
            .all(|&at| graph.neighbor_mask(at) & !self.visited == 0)
    }

    /// Score change caused by `m`: `+w` for Left, `-w` for Right.
    pub fn move_delta(&self, m: &Move) -> S {
        let w = self.instance.weight(m.to).cloned().unwrap_or_else(S::zero);
        match m.ship.owner {
            Player::Left => w,
            Player::Right => -w,
        }
    }

    fn check_move(&self, m: &Move, player: Player) -> Result<usize> {
        if m.ship.owner != player {
            return Err(Error::IllegalMove(format!("{m}: it is {player}'s turn")));
        }
        let from = self
            .ship_location(m.ship)
            .ok_or_else(|| Error::IllegalMove(format!("{m}: no such ship")))?;
        if m.to >= self.instance.vertex_count() || !self.instance.graph().has_edge(from, m.to) {
            return Err(Error::IllegalMove(format!("{m}: not adjacent")));
        }
        if self.visited & (1 << m.to) != 0 {
            return Err(Error::IllegalMove(format!("{m}: vertex already visited")));
        }
        Ok(from)
    }

    /// Applies a move by the player to move and passes the turn.
    pub fn apply_move(&self, m: &Move) -> Result<Self> {
        self.check_move(m, self.to_move)?;
        let mut next = self.clone();
        let delta = self.move_delta(m);
        match m.ship.owner {
            Player::Left => next.left_ships[m.ship.index] = m.to,
            Player::Right => next.right_ships[m.ship.index] = m.to,
        }
        next.visited |= 1 << m.to;
        next.score = next.score + delta;
        next.to_move = self.to_move.opponent();
        Ok(next)
    }

    /// Trace line such as `L: 3->1 (+4)`.
    pub fn describe_move(&self, m: &Move) -> String {
        let from = self
            .ship_location(m.ship)
            .map_or_else(|| "?".to_string(), |v| v.to_string());
        format!(
            "{}: {}->{} ({})",
            m.ship.owner.letter(),
            from,
            m.to,
            signed(&self.move_delta(m))
        )
    }

    /// Replays `moves` from this position, returning each intermediate position.
    pub fn play(&self, moves: &[Move]) -> Result<Vec<Self>> {
        let mut line = vec![self.clone()];
        for m in moves {
            let next = line.last().expect("non-empty").apply_move(m)?;
            line.push(next);
        }
        Ok(line)
    }
}
