#![allow(dead_code)]

use pirates_core::graph_model::{random_instance, RandomParams};
use pirates_core::{Instance, Player};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Plain minimax over the raw instance data, no tables and no pruning.
pub fn naive_final_score(inst: &Instance, first: Player) -> i64 {
    let n = inst.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| inst.graph().has_edge(v, u)).collect())
        .collect();
    let weights: Vec<i64> = inst.weights().iter().map(|w| w.unwrap_or(0)).collect();
    let mut visited = vec![false; n];
    for &s in inst.left_starts().iter().chain(inst.right_starts()) {
        visited[s] = true;
    }
    let mut ships = [inst.left_starts().to_vec(), inst.right_starts().to_vec()];
    let side = match first {
        Player::Left => 0,
        Player::Right => 1,
    };
    minimax(
        &adj,
        &weights,
        &mut ships,
        &mut visited,
        side,
        *inst.initial_score(),
    )
}

fn minimax(
    adj: &[Vec<usize>],
    weights: &[i64],
    ships: &mut [Vec<usize>; 2],
    visited: &mut [bool],
    side: usize,
    score: i64,
) -> i64 {
    let mut best: Option<i64> = None;
    for i in 0..ships[side].len() {
        let from = ships[side][i];
        for &to in &adj[from] {
            if visited[to] {
                continue;
            }
            visited[to] = true;
            ships[side][i] = to;
            let gain = if side == 0 { weights[to] } else { -weights[to] };
            let v = minimax(adj, weights, ships, visited, 1 - side, score + gain);
            ships[side][i] = from;
            visited[to] = false;
            best = Some(match best {
                None => v,
                Some(b) if side == 0 => b.max(v),
                Some(b) => b.min(v),
            });
        }
    }
    best.unwrap_or(score)
}

/// Mixed-weight random instance: 2..=`max_n` vertices, up to two ships a
/// side, weights in -4..=6, sometimes disconnected, random initial score.
pub fn mixed_instance(max_n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let n = rng.gen_range(2..=max_n);
    let left_ships = rng.gen_range(0..=2.min(n));
    let right_ships = rng.gen_range(0..=2.min(n - left_ships));
    let params = RandomParams {
        vertex_count: n,
        edge_probability: rng.gen_range(0.15..0.8),
        weight_range: -4..=6,
        left_ships,
        right_ships,
        connected: rng.gen_bool(0.7),
    };
    let inst: Instance = random_instance(&params, seed).expect("valid parameters");
    let initial = rng.gen_range(-3..=3);
    inst.with_initial_score(initial)
}
