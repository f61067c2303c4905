//! Hamiltonian path to Pirates and Treasure.
//!
//! Every vertex of the source graph gets value 1 and Left starts on the
//! chosen vertex `L`. A path of `|V|` vertices hangs off `L`; Right starts on
//! its vertex next to `L` and can collect the remaining `|V| - 2` path
//! vertices. Left, moving first, wins exactly when a Hamiltonian path of the
//! source graph starts at `L`.

use crate::engine::Position;
use crate::error::{Error, Result};
use crate::graph_model::{grid_graph, grid_vertex, Graph, Instance, Player};
use crate::score::Score;
use crate::solver::{Solver, SolverConfig};
use crate::theory_lab::hampath::hampath_oracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput<S> {
    pub instance: Instance<S>,
    /// Left's start, a vertex of the source graph.
    pub chosen_l: usize,
    /// Vertices on the attached path, `L` included.
    pub path_length: usize,
}

pub fn reduce_from_hampath<S: Score>(g: &Graph, l: usize) -> Result<ReductionOutput<S>> {
    let n = g.vertex_count();
    if l >= n {
        return Err(Error::InvalidArgument(format!(
            "vertex {l} not in a graph of {n} vertices"
        )));
    }
    // path vertices n, n+1, ..., 2n-2 follow L
    let total = 2 * n - 1;
    let mut edges = g.edges();
    let mut prev = l;
    for v in n..total {
        edges.push((prev, v));
        prev = v;
    }
    let graph = Graph::new(total, edges)?;
    let right = if n >= 2 { vec![n] } else { vec![] };
    let instance = Instance::with_weights(graph, vec![l], right, |_| S::one())?;
    Ok(ReductionOutput {
        instance,
        chosen_l: l,
        path_length: n,
    })
}

/// Does Left win moving first (final score above zero)?
pub fn left_wins_first<S: Score>(inst: &Instance<S>, config: SolverConfig) -> Result<bool> {
    let mut solver = Solver::new(inst, config)?;
    Ok(solver
        .final_score(&Position::initial(inst, Player::Left))?
        .is_positive())
}

/// Outcome of one reduction instance next to the rooted oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionCheck {
    pub left_wins: bool,
    pub hampath_from_l: bool,
}

impl ReductionCheck {
    pub fn holds(&self) -> bool {
        self.left_wins == self.hampath_from_l
    }
}

pub fn reduction_check(g: &Graph, l: usize, config: SolverConfig) -> Result<ReductionCheck> {
    let out = reduce_from_hampath::<i64>(g, l)?;
    Ok(ReductionCheck {
        left_wins: left_wins_first(&out.instance, config)?,
        hampath_from_l: hampath_oracle(g, Some(l))?,
    })
}

/// Left wins moving first on the reduction iff `g` has a Hamiltonian path from `l`.
///
/// Needs `|V| >= 2`: with one vertex the attached path is `L` alone and
/// Right has no ship.
pub fn check_reduction(g: &Graph, l: usize, config: SolverConfig) -> Result<bool> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidArgument(
            "reduction needs at least two vertices".into(),
        ));
    }
    Ok(reduction_check(g, l, config)?.holds())
}

/// Reduction applied to a grid graph, with the Euler edge bound checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridReduction<S> {
    pub output: ReductionOutput<S>,
    /// `|E| <= 3|V| - 6` on the output graph (necessary for planarity).
    pub euler_bound_holds: bool,
    pub check: ReductionCheck,
}

pub fn euler_bound_holds(g: &Graph) -> bool {
    let v = g.vertex_count();
    v < 3 || g.edge_count() + 6 <= 3 * v
}

/// Runs the reduction on the `n × m` grid with Left at cell `(x, y)`.
pub fn grid_reduction(
    n: usize,
    m: usize,
    at: (usize, usize),
    config: SolverConfig,
) -> Result<GridReduction<i64>> {
    let g = grid_graph(n, m)?;
    if !(1..=n).contains(&at.0) || !(1..=m).contains(&at.1) {
        return Err(Error::InvalidArgument(format!(
            "cell {at:?} outside {n}x{m} grid"
        )));
    }
    let l = grid_vertex(n, at.0, at.1);
    let output = reduce_from_hampath::<i64>(&g, l)?;
    Ok(GridReduction {
        euler_bound_holds: euler_bound_holds(output.instance.graph()),
        check: reduction_check(&g, l, config)?,
        output,
    })
}
