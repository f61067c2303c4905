use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph_model::{Graph, Instance, MAX_VERTICES};
use crate::score::Score;

/// An `n × m` grid with a uniform treasure value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec<S> {
    /// Columns, x in `1..=n`.
    pub n: usize,
    /// Rows, y in `1..=m`.
    pub m: usize,
    pub weight: S,
}

/// Vertex id of grid cell `(x, y)` (1-based coordinates).
pub fn grid_vertex(n: usize, x: usize, y: usize) -> usize {
    (y - 1) * n + (x - 1)
}

/// Lattice points `1..=n × 1..=m`, joined when at distance 1.
pub fn grid_graph(n: usize, m: usize) -> Result<Graph> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "grid must be at least 1x1, got {n}x{m}"
        )));
    }
    let mut edges = Vec::new();
    for y in 1..=m {
        for x in 1..=n {
            if x < n {
                edges.push((grid_vertex(n, x, y), grid_vertex(n, x + 1, y)));
            }
            if y < m {
                edges.push((grid_vertex(n, x, y), grid_vertex(n, x, y + 1)));
            }
        }
    }
    Ok(Graph::new(n * m, edges)?)
}

pub fn make_grid<S: Score>(
    spec: &GridSpec<S>,
    left_starts: &[(usize, usize)],
    right_starts: &[(usize, usize)],
) -> Result<Instance<S>> {
    let graph = grid_graph(spec.n, spec.m)?;
    let to_id = |&(x, y): &(usize, usize)| {
        if (1..=spec.n).contains(&x) && (1..=spec.m).contains(&y) {
            Ok(grid_vertex(spec.n, x, y))
        } else {
            Err(Error::InvalidArgument(format!(
                "cell ({x},{y}) outside {}x{} grid",
                spec.n, spec.m
            )))
        }
    };
    let left = left_starts.iter().map(to_id).collect::<Result<Vec<_>>>()?;
    let right = right_starts.iter().map(to_id).collect::<Result<Vec<_>>>()?;
    Ok(Instance::with_weights(graph, left, right, |_| {
        spec.weight.clone()
    })?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomParams {
    pub vertex_count: usize,
    pub edge_probability: f64,
    pub weight_range: RangeInclusive<i64>,
    pub left_ships: usize,
    pub right_ships: usize,
    /// Seed the edge set with a random spanning tree so the graph is connected.
    pub connected: bool,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            vertex_count: 6,
            edge_probability: 0.5,
            weight_range: 1..=4,
            left_ships: 1,
            right_ships: 1,
            connected: false,
        }
    }
}

/// Random simple graph on `n` vertices; edges kept with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, connected: bool) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "vertex count must be in 1..={MAX_VERTICES}, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let mut edges = BTreeSet::new();
    if connected {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for i in 1..n {
            let parent = order[rng.gen_range(0..i)];
            let child = order[i];
            edges.insert((parent.min(child), parent.max(child)));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Ok(Graph::from_edge_set(n, &edges))
}

/// Deterministic random instance for `(params, seed)`.
pub fn random_instance<S: Score>(params: &RandomParams, seed: u64) -> Result<Instance<S>> {
    let ships = params.left_ships + params.right_ships;
    if params.vertex_count < ships {
        return Err(Error::InvalidArgument(format!(
            "{} vertices cannot hold {ships} ships",
            params.vertex_count
        )));
    }
    if params.weight_range.is_empty() {
        return Err(Error::InvalidArgument("empty weight range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = random_graph(
        &mut rng,
        params.vertex_count,
        params.edge_probability,
        params.connected,
    )?;
    let mut vertices: Vec<usize> = (0..params.vertex_count).collect();
    vertices.shuffle(&mut rng);
    let left = vertices[..params.left_ships].to_vec();
    let right = vertices[params.left_ships..ships].to_vec();
    let weights: Vec<i64> = (0..params.vertex_count)
        .map(|_| rng.gen_range(params.weight_range.clone()))
        .collect();
    let inst = Instance::with_weights(graph, left, right, |v| {
        S::from_i64(weights[v]).expect("score type represents small integers")
    })?;
    Ok(inst)
}
