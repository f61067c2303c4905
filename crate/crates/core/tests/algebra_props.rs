mod common;

use common::mixed_instance;
use pirates_core::algebra::{
    extract_tree, negate_instance, negate_tree, sum_solve, sum_trees, tree_final_scores,
    tree_identical, GameTree as Tree, SumPosition as Sum,
};
use pirates_core::solver::final_scores;
use pirates_core::{classify, GameTree, Player, Position, SolverConfig};
use proptest::prelude::*;

fn config() -> SolverConfig {
    SolverConfig::default()
}

fn tree_of(inst: &pirates_core::Instance) -> GameTree {
    extract_tree(&Position::initial(inst, Player::Left), config()).unwrap()
}

#[test]
fn tree_scores_match_solver() {
    for seed in 0..400 {
        let inst = mixed_instance(7, seed);
        let t = tree_of(&inst);
        assert_eq!(
            tree_final_scores(&t),
            final_scores(&inst, config()).unwrap(),
            "seed {seed}"
        );
        // the root does not depend on who moves first
        let r = extract_tree(&Position::initial(&inst, Player::Right), config()).unwrap();
        assert!(tree_identical(&t, &r));
    }
}

#[test]
fn negation_laws_on_extracted_trees() {
    for seed in 0..300 {
        let inst = mixed_instance(7, seed);
        let t = tree_of(&inst);
        let n = negate_tree(&t);
        assert!(tree_identical(&negate_tree(&n), &t));
        assert!(
            tree_identical(&n, &tree_of(&negate_instance(&inst))),
            "seed {seed}"
        );
        let (s, m) = (tree_final_scores(&t), tree_final_scores(&n));
        assert_eq!(m.s_left, -s.s_right);
        assert_eq!(m.s_right, -s.s_left);
        assert_eq!(classify(&m), classify(&s).negate());
    }
}

#[test]
fn sum_solve_matches_sum_tree() {
    for seed in 0..200 {
        let a = mixed_instance(5, seed);
        let b = mixed_instance(4, seed + 10_000);
        for first in [Player::Left, Player::Right] {
            let sum = Sum::from_instances(&[&a, &b], first);
            let scores = sum_solve(&sum, config()).unwrap();
            let tree = sum.tree(config()).unwrap();
            assert_eq!(tree_final_scores(&tree), scores, "seed {seed}");
            assert!(tree_identical(
                &tree,
                &sum_trees(&tree_of(&a), &tree_of(&b))
            ));
        }
    }
}

fn arb_tree() -> impl Strategy<Value = Tree<i64>> {
    let leaf = (-5i64..=5).prop_map(Tree::leaf);
    leaf.prop_recursive(3, 24, 3, |inner| {
        (
            -5i64..=5,
            prop::collection::vec(inner.clone(), 0..3),
            prop::collection::vec(inner, 0..3),
        )
            .prop_map(|(s, l, r)| Tree::new(s, l, r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sum_commutes(a in arb_tree(), b in arb_tree()) {
        prop_assert!(tree_identical(&sum_trees(&a, &b), &sum_trees(&b, &a)));
    }

    #[test]
    fn sum_associates(a in arb_tree(), b in arb_tree(), c in arb_tree()) {
        let left = sum_trees(&sum_trees(&a, &b), &c);
        let right = sum_trees(&a, &sum_trees(&b, &c));
        prop_assert!(tree_identical(&left, &right));
    }

    #[test]
    fn negation_is_an_involution(a in arb_tree()) {
        prop_assert!(tree_identical(&negate_tree(&negate_tree(&a)), &a));
        let (s, n) = (tree_final_scores(&a), tree_final_scores(&negate_tree(&a)));
        prop_assert_eq!(n, s.negate());
    }

    #[test]
    fn negation_distributes_over_sums(a in arb_tree(), b in arb_tree()) {
        let lhs = negate_tree(&sum_trees(&a, &b));
        let rhs = sum_trees(&negate_tree(&a), &negate_tree(&b));
        prop_assert!(tree_identical(&lhs, &rhs));
    }

    #[test]
    fn shifting_the_score_shifts_results(a in arb_tree(), d in -9i64..=9) {
        let s = tree_final_scores(&a);
        let t = tree_final_scores(&a.shift(&d));
        prop_assert_eq!(t.s_left, s.s_left + d);
        prop_assert_eq!(t.s_right, s.s_right + d);
    }

    #[test]
    fn bracket_form_round_trips(a in arb_tree()) {
        let parsed: Tree<i64> = pirates_core::algebra::parse_tree(&a.to_string()).unwrap();
        prop_assert!(tree_identical(&parsed, &a));
    }
}
