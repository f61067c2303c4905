//! The example positions as built-in instances (treasure value 1). The
//! same files live in the repository's `fixtures/` directory.

use crate::graph_model::{parse_instance, Instance};
use crate::solver::OutcomeClass;

macro_rules! fixture_files {
    ($($name:literal),* $(,)?) => {
        /// `(file stem, file text)` for every shipped fixture.
        pub const FIXTURE_FILES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../../../fixtures/", $name, ".pt")))),*
        ];
    };
}

fixture_files!(
    "fig_ex",
    "fig_ex1",
    "fig_half",
    "fig_add_a",
    "fig_add_b",
    "fig_mis_a",
    "fig_mis_b",
    "fig_mis_c",
    "tab_case3_1a",
    "tab_case3_1b",
    "tab_case3_2a",
    "tab_case3_2b",
    "tab_case3_3a",
    "tab_case3_3b",
    "tab_case4_1a",
    "tab_case4_1b",
    "tab_case4_2a",
    "tab_case4_2b",
    "tab_case5_1a",
    "tab_case5_1b",
    "tab_case5_2a",
    "tab_case5_2b",
    "tab_case5_3a",
    "tab_case5_3b",
);

/// Parses a shipped fixture by file stem.
pub fn load(name: &str) -> Option<Instance<i64>> {
    FIXTURE_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_instance(text).expect("shipped fixtures are valid"))
}

fn get(name: &str) -> Instance<i64> {
    load(name).expect("known fixture")
}

/// Worked example with final scores 2 and 2.
pub fn fig_ex() -> Instance<i64> {
    get("fig_ex")
}

/// Greedy play is not optimal here.
pub fn fig_ex1() -> Instance<i64> {
    get("fig_ex1")
}

/// The path `x - L - x - R`.
pub fn fig_half() -> Instance<i64> {
    get("fig_half")
}

/// Two components; best first moves agree under normal and scoring play.
pub fn fig_add() -> [Instance<i64>; 2] {
    [get("fig_add_a"), get("fig_add_b")]
}

/// Three components with treasure value -1.
pub fn fig_mis() -> [Instance<i64>; 3] {
    [get("fig_mis_a"), get("fig_mis_b"), get("fig_mis_c")]
}

/// A sum `g + h` with its expected outcome class.
#[derive(Debug, Clone)]
pub struct TableFixture {
    pub name: &'static str,
    pub g: Instance<i64>,
    pub h: Instance<i64>,
    /// Classes the case assumes for the two components (unordered).
    pub component_classes: [OutcomeClass; 2],
    pub expected_class: OutcomeClass,
}

pub fn table_fixtures() -> Vec<TableFixture> {
    use OutcomeClass::*;
    let specs: [(&str, [OutcomeClass; 2], OutcomeClass); 8] = [
        ("tab_case3_1", [L, R], Tie),
        ("tab_case3_2", [L, R], R),
        ("tab_case3_3", [L, R], N),
        ("tab_case4_1", [L, N], L),
        ("tab_case4_2", [L, N], N),
        ("tab_case5_1", [N, N], R),
        ("tab_case5_2", [N, N], Tie),
        ("tab_case5_3", [N, N], N),
    ];
    specs
        .into_iter()
        .map(|(name, component_classes, expected_class)| TableFixture {
            name,
            g: get(&format!("{name}a")),
            h: get(&format!("{name}b")),
            component_classes,
            expected_class,
        })
        .collect()
}
