use std::fmt;

use crate::error::InstanceError;
use crate::graph_model::Graph;
use crate::score::Score;

/// One of the two players. Left collects positive score, Right negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Player::Left => 'L',
            Player::Right => 'R',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Left => "left",
            Player::Right => "right",
        })
    }
}

/// A static game description: graph, treasure values and ship starts.
///
/// Start vertices carry no treasure; every other vertex carries exactly one
/// value. The initial score is the root score of the game (zero unless a
/// caller says otherwise). Ship `i` of a player starts on that player's
/// `i`-th lowest start vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance<S> {
    graph: Graph,
    weights: Vec<Option<S>>,
    left_starts: Vec<usize>,
    right_starts: Vec<usize>,
    initial_score: S,
}

impl<S: Score> Instance<S> {
    pub fn new(
        graph: Graph,
        weights: Vec<Option<S>>,
        left_starts: Vec<usize>,
        right_starts: Vec<usize>,
        initial_score: S,
    ) -> Result<Self, InstanceError> {
        let n = graph.vertex_count();
        if weights.len() != n {
            return Err(InstanceError::WeightCount {
                expected: n,
                got: weights.len(),
            });
        }
        let mut is_start = vec![false; n];
        for &v in left_starts.iter().chain(&right_starts) {
            if v >= n {
                return Err(InstanceError::VertexOutOfRange(v));
            }
            if is_start[v] {
                return Err(InstanceError::DuplicateShip(v));
            }
            is_start[v] = true;
        }
        for (v, w) in weights.iter().enumerate() {
            match (is_start[v], w) {
                (true, Some(_)) => return Err(InstanceError::WeightedStart(v)),
                (false, None) => return Err(InstanceError::MissingWeight(v)),
                _ => {}
            }
        }
        let (mut left_starts, mut right_starts) = (left_starts, right_starts);
        left_starts.sort_unstable();
        right_starts.sort_unstable();
        Ok(Instance {
            graph,
            weights,
            left_starts,
            right_starts,
            initial_score,
        })
    }

    /// Builds an instance whose non-start vertices are weighted by `weight(v)`.
    pub fn with_weights<F>(
        graph: Graph,
        left_starts: Vec<usize>,
        right_starts: Vec<usize>,
        weight: F,
    ) -> Result<Self, InstanceError>
    where
        F: Fn(usize) -> S,
    {
        let weights = (0..graph.vertex_count())
            .map(|v| {
                if left_starts.contains(&v) || right_starts.contains(&v) {
                    None
                } else {
                    Some(weight(v))
                }
            })
            .collect();
        Instance::new(graph, weights, left_starts, right_starts, S::zero())
    }

    /// The game `0`: one treasureless vertex and no ships.
    pub fn zero() -> Self {
        let graph = Graph::new(1, []).expect("one vertex");
        Instance::new(graph, vec![Some(S::zero())], vec![], vec![], S::zero())
            .expect("valid by construction")
    }

    pub fn with_initial_score(mut self, score: S) -> Self {
        self.initial_score = score;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Treasure on `v`; `None` for start vertices.
    pub fn weight(&self, v: usize) -> Option<&S> {
        self.weights[v].as_ref()
    }

    pub fn weights(&self) -> &[Option<S>] {
        &self.weights
    }

    pub fn left_starts(&self) -> &[usize] {
        &self.left_starts
    }

    pub fn right_starts(&self) -> &[usize] {
        &self.right_starts
    }

    pub fn starts(&self, player: Player) -> &[usize] {
        match player {
            Player::Left => &self.left_starts,
            Player::Right => &self.right_starts,
        }
    }

    pub fn initial_score(&self) -> &S {
        &self.initial_score
    }

    pub fn ship_count(&self) -> usize {
        self.left_starts.len() + self.right_starts.len()
    }

    pub fn start_mask(&self) -> u64 {
        self.left_starts
            .iter()
            .chain(&self.right_starts)
            .fold(0, |m, &v| m | 1 << v)
    }

    /// Sum of absolute treasure values.
    pub fn total_abs_weight(&self) -> S {
        self.weights
            .iter()
            .flatten()
            .fold(S::zero(), |acc, w| acc + w.abs())
    }

    /// Non-fatal remarks, e.g. non-positive treasure values.
    pub fn warnings(&self) -> Vec<String> {
        self.weights
            .iter()
            .enumerate()
            .filter_map(|(v, w)| match w {
                Some(w) if !w.is_positive() => {
                    Some(format!("vertex {v} has non-positive value {w}"))
                }
                _ => None,
            })
            .collect()
    }

    /// Same graph and ships, treasure values mapped through `f`.
    pub fn map_weights<T: Score, F: Fn(&S) -> T>(&self, f: F) -> Instance<T> {
        Instance {
            graph: self.graph.clone(),
            weights: self.weights.iter().map(|w| w.as_ref().map(&f)).collect(),
            left_starts: self.left_starts.clone(),
            right_starts: self.right_starts.clone(),
            initial_score: f(&self.initial_score),
        }
    }

    /// Left and Right ships exchanged and the initial score negated.
    pub fn swap_players(&self) -> Self {
        Instance {
            graph: self.graph.clone(),
            weights: self.weights.clone(),
            left_starts: self.right_starts.clone(),
            right_starts: self.left_starts.clone(),
            initial_score: -self.initial_score.clone(),
        }
    }

    /// Places the instances side by side; initial scores add.
    pub fn disjoint_union(parts: &[&Instance<S>]) -> Result<Self, InstanceError> {
        let graphs: Vec<&Graph> = parts.iter().map(|p| &p.graph).collect();
        let (graph, offsets) = Graph::disjoint_union(&graphs)?;
        let mut weights = Vec::with_capacity(graph.vertex_count());
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut score = S::zero();
        for (part, &off) in parts.iter().zip(&offsets) {
            weights.extend(part.weights.iter().cloned());
            left.extend(part.left_starts.iter().map(|v| v + off));
            right.extend(part.right_starts.iter().map(|v| v + off));
            score = score + part.initial_score.clone();
        }
        Instance::new(graph, weights, left, right, score)
    }
}
