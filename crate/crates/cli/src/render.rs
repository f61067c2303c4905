use std::fmt::Write;

use pirates_core::engine::Position;
use pirates_core::graph_model::Instance;
use pirates_core::solver::SolveReport;
use pirates_core::{Move, Player, Score};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum First {
    Left,
    Right,
    Both,
}

impl First {
    pub fn players(self) -> &'static [Player] {
        match self {
            First::Left => &[Player::Left],
            First::Right => &[Player::Right],
            First::Both => &[Player::Left, Player::Right],
        }
    }
}

fn moves(list: &[Move]) -> String {
    if list.is_empty() {
        return "-".into();
    }
    list.iter()
        .map(Move::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn line<S: Score>(inst: &Instance<S>, first: Player, pv: &[Move]) -> String {
    let mut pos = Position::initial(inst, first);
    let mut parts = Vec::new();
    for m in pv {
        parts.push(pos.describe_move(m));
        pos = pos.apply_move(m).expect("principal variation is legal");
    }
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(", ")
    }
}

pub fn report<S: Score>(inst: &Instance<S>, r: &SolveReport<S>, first: First) -> String {
    let mut out = String::new();
    let s = &r.final_scores;
    writeln!(
        out,
        "s_L={} s_R={} class {}",
        s.s_left,
        s.s_right,
        r.outcome()
    )
    .unwrap();
    for &p in first.players() {
        let (best, pv, score) = match p {
            Player::Left => (
                &r.best_first_moves_left,
                &r.principal_variation_left,
                &s.s_left,
            ),
            Player::Right => (
                &r.best_first_moves_right,
                &r.principal_variation_right,
                &s.s_right,
            ),
        };
        writeln!(out, "{p} first: final {score}").unwrap();
        writeln!(out, "  best: {}", moves(best)).unwrap();
        writeln!(out, "  line: {}", line(inst, p, pv)).unwrap();
    }
    writeln!(out, "nodes {}", r.nodes_expanded).unwrap();
    out
}

pub fn report_kv<S: Score>(r: &SolveReport<S>, first: First) -> String {
    let mut out = String::new();
    let s = &r.final_scores;
    writeln!(out, "s_L={}", s.s_left).unwrap();
    writeln!(out, "s_R={}", s.s_right).unwrap();
    writeln!(out, "class={}", r.outcome()).unwrap();
    for &p in first.players() {
        let (tag, best, pv) = match p {
            Player::Left => (
                "left",
                &r.best_first_moves_left,
                &r.principal_variation_left,
            ),
            Player::Right => (
                "right",
                &r.best_first_moves_right,
                &r.principal_variation_right,
            ),
        };
        writeln!(out, "best_{tag}={}", moves(best)).unwrap();
        writeln!(out, "pv_{tag}={}", moves(pv)).unwrap();
    }
    writeln!(out, "nodes={}", r.nodes_expanded).unwrap();
    out
}
