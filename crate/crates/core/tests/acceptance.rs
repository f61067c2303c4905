//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use common::{mixed_instance, naive_final_score};
use pirates_core::algebra::{
    extract_tree, negate_instance, negate_tree, sum_trees, tree_final_scores, tree_identical,
};
use pirates_core::solver::{final_scores, greedy_score, solve, Solver};
use pirates_core::theory_lab::{
    check_distinguishing_contexts, check_no_n_positions, check_no_p_positions, check_outcome_table,
    check_self_sum_tie, convention_comparison_sum, fixtures, verify_reduction, SweepConfig,
    SweepReport,
};
use pirates_core::{classify, Move, OutcomeClass, Player, Position, ShipId, SolverConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, message: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn sweep(report: pirates_core::Result<SweepReport>) -> Result<SweepReport, String> {
    let report = report.map_err(|e| e.to_string())?;
    if report.passed() {
        Ok(report)
    } else {
        Err(report.to_string())
    }
}

fn summary(r: &SweepReport) -> String {
    format!(
        "{} checked={} violations={}",
        r.name,
        r.instances_checked,
        r.violations.len()
    )
}

fn config() -> SolverConfig {
    SolverConfig::default()
}

fn mv(owner: Player, index: usize, to: usize) -> Move {
    Move {
        ship: ShipId { owner, index },
        to,
    }
}

fn worked_example() -> Outcome {
    let inst = fixtures::fig_ex();
    let scores = final_scores(&inst, config()).map_err(|e| e.to_string())?;
    ensure(
        scores.s_left == 2 && scores.s_right == 2,
        format!("scores {scores:?}"),
    )?;
    ensure(classify(&scores) == OutcomeClass::L, "class is not L")?;
    let trace = [
        mv(Player::Left, 0, 1),
        mv(Player::Right, 0, 3),
        mv(Player::Left, 0, 2),
        mv(Player::Right, 0, 4),
    ];
    let mut solver = Solver::new(&inst, config()).map_err(|e| e.to_string())?;
    let mut pos = Position::initial(&inst, Player::Left);
    for m in &trace {
        let best = solver.best_moves(&pos).map_err(|e| e.to_string())?;
        ensure(best.contains(m), format!("{m} is not optimal"))?;
        pos = pos.apply_move(m).map_err(|e| e.to_string())?;
    }
    ensure(
        pos.is_terminal() && *pos.score() == 2,
        "trace does not end at 2",
    )?;
    Ok("s_L=2 s_R=2 class L, 4-move trace optimal".into())
}

fn greedy_example() -> Outcome {
    let inst = fixtures::fig_ex1();
    let greedy =
        greedy_score(&inst, Player::Left, Player::Left, config()).map_err(|e| e.to_string())?;
    let report = solve(&inst, config()).map_err(|e| e.to_string())?;
    ensure(greedy == -1, format!("greedy {greedy}"))?;
    ensure(
        report.final_scores.s_left == 1,
        format!("s_L {}", report.final_scores.s_left),
    )?;
    let root = Position::initial(&inst, Player::Left);
    let heaviest = root
        .legal_moves()
        .into_iter()
        .max_by_key(|m| (*inst.weight(m.to).unwrap(), std::cmp::Reverse(m.to)))
        .ok_or("Left cannot move")?;
    ensure(
        !report.best_first_moves_left.contains(&heaviest),
        format!("greedy move {heaviest} is optimal"),
    )?;
    Ok(format!(
        "greedy -1, optimal +1, greedy move {heaviest} excluded"
    ))
}

fn reduction() -> Outcome {
    let r = sweep(verify_reduction(&SweepConfig {
        max_n: 6,
        ..SweepConfig::default()
    }))?;
    Ok(summary(&r))
}

fn no_p_or_n() -> Outcome {
    let c = SweepConfig {
        max_n: 5,
        random_count: 10_000,
        random_max_n: 9,
        seed: 1,
        solver: config(),
    };
    let p = sweep(check_no_p_positions(&c))?;
    let n = sweep(check_no_n_positions(&c))?;
    Ok(format!("{}; {}", summary(&p), summary(&n)))
}

fn outcome_table() -> Outcome {
    use OutcomeClass::*;
    let expected_class = [Tie, R, N, L, N, R, Tie, N];
    let mut seen = Vec::new();
    for (fx, want) in fixtures::table_fixtures().iter().zip(expected_class) {
        let union =
            pirates_core::Instance::disjoint_union(&[&fx.g, &fx.h]).map_err(|e| e.to_string())?;
        let got = classify(&final_scores(&union, config()).map_err(|e| e.to_string())?);
        ensure(
            got == want,
            format!("{} gives {got}, expected_class {want}", fx.name),
        )?;
        seen.push(got.to_string());
    }
    let r = sweep(check_outcome_table(&SweepConfig {
        max_n: 4,
        random_count: 1000,
        random_max_n: 6,
        seed: 2,
        solver: config(),
    }))?;
    Ok(format!("fixtures {} ; {}", seen.join(" "), summary(&r)))
}

fn self_sum() -> Outcome {
    let r = sweep(check_self_sum_tie(&SweepConfig {
        max_n: 4,
        random_count: 1000,
        random_max_n: 7,
        seed: 3,
        solver: config(),
    }))?;
    Ok(summary(&r))
}

fn contexts() -> Outcome {
    let r = sweep(check_distinguishing_contexts(&SweepConfig {
        max_n: 0,
        random_count: 1000,
        random_max_n: 8,
        seed: 4,
        solver: config(),
    }))?;
    ensure(
        r.instances_checked >= 1000,
        format!("only {} instances", r.instances_checked),
    )?;
    Ok(summary(&r))
}

fn properties() -> Outcome {
    let e = |e: pirates_core::Error| e.to_string();
    for seed in 0..1000 {
        let inst = mixed_instance(9, seed);
        let s = final_scores(&inst, config()).map_err(e)?;
        ensure(
            s.s_left == naive_final_score(&inst, Player::Left)
                && s.s_right == naive_final_score(&inst, Player::Right),
            format!("alpha-beta differs from minimax, seed {seed}"),
        )?;
        let m = final_scores(&negate_instance(&inst), config()).map_err(e)?;
        ensure(m == s.negate(), format!("mirror law, seed {seed}"))?;
        let shifted = final_scores(
            &inst.clone().with_initial_score(inst.initial_score() + 5),
            config(),
        )
        .map_err(e)?;
        ensure(
            shifted.s_left == s.s_left + 5 && shifted.s_right == s.s_right + 5,
            format!("offset linearity, seed {seed}"),
        )?;
    }
    for seed in 0..300 {
        let a = mixed_instance(6, seed);
        let b = mixed_instance(4, seed + 50_000);
        let c = mixed_instance(3, seed + 90_000);
        let tree = |i| extract_tree(&Position::initial(i, Player::Left), config());
        let (ta, tb, tc) = (
            tree(&a).map_err(e)?,
            tree(&b).map_err(e)?,
            tree(&c).map_err(e)?,
        );
        ensure(
            tree_final_scores(&ta) == final_scores(&a, config()).map_err(e)?,
            format!("tree vs solver, seed {seed}"),
        )?;
        ensure(
            tree_identical(&negate_tree(&negate_tree(&ta)), &ta),
            "negation involution",
        )?;
        ensure(
            tree_final_scores(&negate_tree(&ta)) == tree_final_scores(&ta).negate(),
            "tree mirror",
        )?;
        ensure(
            tree_identical(&sum_trees(&ta, &tb), &sum_trees(&tb, &ta)),
            "commutativity",
        )?;
        ensure(
            tree_identical(
                &sum_trees(&sum_trees(&ta, &tb), &tc),
                &sum_trees(&ta, &sum_trees(&tb, &tc)),
            ),
            "associativity",
        )?;
    }
    Ok("minimax 1000 seeds, trees 300 seeds, all exact".into())
}

fn conventions() -> Outcome {
    let [a, b] = fixtures::fig_add();
    let add = convention_comparison_sum(&[&a, &b], config()).map_err(|e| e.to_string())?;
    ensure(add.right.normal_agrees(), format!("add, Right:\n{add}"))?;
    let [x, y, z] = fixtures::fig_mis();
    let mis = convention_comparison_sum(&[&x, &y, &z], config()).map_err(|e| e.to_string())?;
    ensure(mis.left.misere_agrees(), format!("mis, Left:\n{mis}"))?;
    Ok("add: Right scoring/normal agree; mis: Left scoring/misere agree".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "worked example scores and trace",
            Duration::from_secs(1),
            worked_example,
        ),
        (
            "greedy versus optimal",
            Duration::from_secs(1),
            greedy_example,
        ),
        (
            "hamiltonian path reduction, n <= 6",
            Duration::from_secs(600),
            reduction,
        ),
        (
            "no P (weights 1) and no N (weights -1)",
            Duration::from_secs(600),
            no_p_or_n,
        ),
        (
            "outcome table fixtures and membership",
            Duration::from_secs(600),
            outcome_table,
        ),
        (
            "game plus negation is a tie",
            Duration::from_secs(600),
            self_sum,
        ),
        (
            "distinguishing contexts",
            Duration::from_secs(600),
            contexts,
        ),
        ("property suites", Duration::from_secs(600), properties),
        (
            "convention comparison",
            Duration::from_secs(60),
            conventions,
        ),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => {
                Err(format!("{detail} but took {elapsed:.2?}, limit {limit:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {} {name}: PASS ({detail}) [{elapsed:.2?}, limit {limit:?}]",
                i + 1
            ),
            Err(why) => {
                failures += 1;
                println!("criterion {} {name}: FAIL [{elapsed:.2?}]\n{why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
