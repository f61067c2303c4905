use pirates_core::graph_model::random_graph;
use pirates_core::theory_lab::{hampath_with, HamPathMethod};
use pirates_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn agree(g: &Graph) {
    for start in std::iter::once(None).chain((0..g.vertex_count()).map(Some)) {
        let dfs = hampath_with(g, start, HamPathMethod::Dfs).unwrap();
        let perm = hampath_with(g, start, HamPathMethod::Permutations).unwrap();
        assert_eq!(dfs, perm, "start {start:?}\n{:?}", g.edges());
    }
}

#[test]
fn methods_agree_on_every_graph_up_to_six_vertices() {
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for subset in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| subset & (1 << i) != 0)
                .map(|(_, &e)| e);
            agree(&Graph::new(n, edges).unwrap());
        }
    }
}

#[test]
fn methods_agree_on_sampled_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..300 {
        let n = 7 + i % 2;
        let p = [0.2, 0.35, 0.5, 0.7][i % 4];
        agree(&random_graph(&mut rng, n, p, i % 3 != 0).unwrap());
    }
}
