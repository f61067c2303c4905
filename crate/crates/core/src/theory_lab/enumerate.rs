use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph_model::{random_graph, Graph, Instance};
use crate::score::Score;

/// Exhaustive enumeration stops here (2^21 edge subsets at 7 vertices).
pub const ENUMERATION_MAX_VERTICES: usize = 7;

/// All connected labeled graphs on exactly `n` vertices, in edge-subset order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "graph enumeration supports 1..={ENUMERATION_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for subset in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| subset & (1 << i) != 0)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("pairs are distinct and in range");
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Every connected labeled instance with at most `max_n` vertices, Left
/// ships on the first vertices, Right ships next, all other vertices
/// weighted `weight`, initial score zero. Any placement of ships on a
/// labeled graph is a relabeling of one of these.
pub fn enumerate_pt<S: Score>(
    max_n: usize,
    weight: &S,
    ships: (usize, usize),
) -> Result<Vec<Instance<S>>> {
    let (left, right) = ships;
    let smallest = (left + right).max(1);
    if max_n < smallest {
        return Err(Error::InvalidArgument(format!(
            "{max_n} vertices cannot hold {} ships",
            left + right
        )));
    }
    let mut out = Vec::new();
    for n in smallest..=max_n {
        for g in connected_graphs(n)? {
            let inst = Instance::with_weights(
                g,
                (0..left).collect(),
                (left..left + right).collect(),
                |_| weight.clone(),
            )?;
            out.push(inst);
        }
    }
    Ok(out)
}

fn require_positive<S: Score>(x: &S) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "x must be positive, got {x}; with x = 0 every position is a tie"
        )))
    }
}

/// The all-`x` family (x > 0).
pub fn enumerate_ptx<S: Score>(
    max_n: usize,
    x: &S,
    ships: (usize, usize),
) -> Result<Vec<Instance<S>>> {
    require_positive(x)?;
    enumerate_pt(max_n, x, ships)
}

/// The all-`-x` family (x > 0).
pub fn enumerate_pt_negx<S: Score>(
    max_n: usize,
    x: &S,
    ships: (usize, usize),
) -> Result<Vec<Instance<S>>> {
    require_positive(x)?;
    enumerate_pt(max_n, &-x.clone(), ships)
}

/// Random connected instance with 2..=`max_n` vertices, one or two ships a
/// side, every other vertex weighted `weight`.
pub fn random_pt<S: Score>(weight: &S, max_n: usize, seed: u64) -> Result<Instance<S>> {
    if max_n < 2 {
        return Err(Error::InvalidArgument(
            "random instances need at least 2 vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let left = if n >= 3 && rng.gen_bool(0.25) { 2 } else { 1 };
    let right = if n >= left + 2 && rng.gen_bool(0.25) {
        2
    } else {
        1
    };
    let p = rng.gen_range(0.1..0.7);
    let graph = random_graph(&mut rng, n, p, true)?;
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(&mut rng);
    Ok(Instance::with_weights(
        graph,
        vertices[..left].to_vec(),
        vertices[left..left + right].to_vec(),
        |_| weight.clone(),
    )?)
}
