//! Exhaustive and seeded-random checks of the structural results.
//!
//! Each sweep returns a [`SweepReport`]; the report passes when it has no
//! violations. Work is spread over the current rayon pool and violations are
//! sorted by instance text, so reports do not depend on the thread count.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::negate_instance;
use crate::engine::Position;
use crate::error::Result;
use crate::graph_model::{random_instance, serialize_instance, Instance, Player, RandomParams};
use crate::solver::{classify, final_scores, OutcomeClass, SolverConfig};
use crate::theory_lab::context::check_context;
use crate::theory_lab::enumerate::{connected_graphs, enumerate_pt_negx, enumerate_ptx, random_pt};
use crate::theory_lab::fixtures::table_fixtures;
use crate::theory_lab::reduction::{reduce_from_hampath, reduction_check};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest vertex count for exhaustive enumeration.
    pub max_n: usize,
    /// Number of random instances (or pairs).
    pub random_count: usize,
    /// Largest vertex count of a random instance.
    pub random_max_n: usize,
    pub seed: u64,
    pub solver: SolverConfig,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 4,
            random_count: 1000,
            random_max_n: 7,
            seed: 0,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// The offending instance, or the components of an offending sum.
    pub instances: Vec<Instance<i64>>,
    pub expected: String,
    pub got: String,
}

impl Violation {
    fn sort_key(&self) -> (String, String, String) {
        let text = self
            .instances
            .iter()
            .map(serialize_instance)
            .collect::<Vec<_>>()
            .join("+\n");
        (text, self.expected.clone(), self.got.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub instances_checked: usize,
    pub violations: Vec<Violation>,
    pub seed: u64,
    pub params: String,
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sweep {}", self.name)?;
        writeln!(f, "params {} seed={}", self.params, self.seed)?;
        for note in &self.notes {
            writeln!(f, "note {note}")?;
        }
        for v in &self.violations {
            writeln!(f, "violation expected {} got {}", v.expected, v.got)?;
            for inst in &v.instances {
                for line in serialize_instance(inst).lines() {
                    writeln!(f, "  {line}")?;
                }
            }
        }
        writeln!(
            f,
            "checked={} violations={}",
            self.instances_checked,
            self.violations.len()
        )?;
        write!(f, "result {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

fn sorted_violations(found: Vec<Option<Violation>>) -> Vec<Violation> {
    let mut out: Vec<Violation> = found.into_iter().flatten().collect();
    out.sort_by_cached_key(Violation::sort_key);
    out
}

fn params_text(config: &SweepConfig) -> String {
    format!(
        "max_n={} random={} random_max_n={}",
        config.max_n, config.random_count, config.random_max_n
    )
}

fn class_of(inst: &Instance<i64>, config: SolverConfig) -> Result<OutcomeClass> {
    Ok(classify(&final_scores(inst, config)?))
}

fn sum_class(g: &Instance<i64>, h: &Instance<i64>, config: SolverConfig) -> Result<OutcomeClass> {
    class_of(&Instance::disjoint_union(&[g, h])?, config)
}

fn random_family(config: &SweepConfig, weight: i64) -> Result<Vec<Instance<i64>>> {
    (0..config.random_count as u64)
        .map(|i| random_pt(&weight, config.random_max_n, config.seed.wrapping_add(i)))
        .collect()
}

fn forbid_class(
    name: &str,
    family: Vec<Instance<i64>>,
    forbidden: OutcomeClass,
    config: &SweepConfig,
    exhaustive: usize,
) -> Result<SweepReport> {
    let found = family
        .par_iter()
        .map(|inst| {
            let got = class_of(inst, config.solver)?;
            Ok((got == forbidden).then(|| Violation {
                instances: vec![inst.clone()],
                expected: format!("not {forbidden}"),
                got: got.to_string(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        name: name.into(),
        instances_checked: family.len(),
        violations: sorted_violations(found),
        seed: config.seed,
        params: params_text(config),
        notes: vec![format!("exhaustive instances {exhaustive}")],
    })
}

/// All weights `x = 1`: no instance is a second-player win.
pub fn check_no_p_positions(config: &SweepConfig) -> Result<SweepReport> {
    let mut family = enumerate_ptx(config.max_n, &1, (1, 1))?;
    let exhaustive = family.len();
    family.extend(random_family(config, 1)?);
    forbid_class(
        "no-p-positions",
        family,
        OutcomeClass::P,
        config,
        exhaustive,
    )
}

/// All weights `-1`: no instance is a first-player win.
pub fn check_no_n_positions(config: &SweepConfig) -> Result<SweepReport> {
    let mut family = enumerate_pt_negx(config.max_n, &1, (1, 1))?;
    let exhaustive = family.len();
    family.extend(random_family(config, -1)?);
    forbid_class(
        "no-n-positions",
        family,
        OutcomeClass::N,
        config,
        exhaustive,
    )
}

/// Classes the sum of a `g` game and an `h` game can have (all weights
/// positive and equal). `None` when either class is `P`, which does not occur.
pub fn table_cell(g: OutcomeClass, h: OutcomeClass) -> Option<&'static [OutcomeClass]> {
    use OutcomeClass::*;
    const FOUR: &[OutcomeClass] = &[L, R, N, Tie];
    Some(match (g, h) {
        (P, _) | (_, P) => return None,
        (Tie, Tie) => &[Tie],
        (Tie, L) | (L, Tie) | (L, L) => &[L],
        (Tie, R) | (R, Tie) | (R, R) => &[R],
        (Tie, N) | (N, Tie) => &[N],
        (L, R) | (R, L) | (N, N) => FOUR,
        (L, N) | (N, L) => &[L, N],
        (R, N) | (N, R) => &[R, N],
    })
}

fn cell_name(g: OutcomeClass, h: OutcomeClass) -> String {
    let (a, b) = if g <= h { (g, h) } else { (h, g) };
    format!("{a}+{b}")
}

struct PairResult {
    cell: (OutcomeClass, OutcomeClass),
    sum: OutcomeClass,
    violation: Option<Violation>,
}

fn check_pair(g: &Instance<i64>, h: &Instance<i64>, solver: SolverConfig) -> Result<PairResult> {
    let (cg, ch) = (class_of(g, solver)?, class_of(h, solver)?);
    let sum = sum_class(g, h, solver)?;
    let violation = match table_cell(cg, ch) {
        Some(cell) if cell.contains(&sum) => None,
        Some(cell) => Some(format!(
            "one of {}",
            cell.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )),
        None => Some(format!("components outside P, got {cg} and {ch}")),
    }
    .map(|expected| Violation {
        instances: vec![g.clone(), h.clone()],
        expected,
        got: sum.to_string(),
    });
    let cell = if cg <= ch { (cg, ch) } else { (ch, cg) };
    Ok(PairResult {
        cell,
        sum,
        violation,
    })
}

/// Table membership for the shipped sums, exhaustive pairs up to `max_n`
/// vertices each, and `random_count` random pairs; then every class of every
/// multi-valued cell must have been observed.
pub fn check_outcome_table(config: &SweepConfig) -> Result<SweepReport> {
    let solver = config.solver;
    let mut violations = Vec::new();
    let mut observed: BTreeSet<((OutcomeClass, OutcomeClass), OutcomeClass)> = BTreeSet::new();
    let mut checked = 0;

    for fx in table_fixtures() {
        for (g, h, expected_class) in [
            (fx.g.clone(), fx.h.clone(), fx.expected_class),
            (
                negate_instance(&fx.g),
                negate_instance(&fx.h),
                fx.expected_class.negate(),
            ),
        ] {
            let r = check_pair(&g, &h, solver)?;
            checked += 1;
            observed.insert((r.cell, r.sum));
            violations.extend(r.violation);
            if r.sum != expected_class {
                violations.push(Violation {
                    instances: vec![g, h],
                    expected: format!("{expected_class} ({})", fx.name),
                    got: r.sum.to_string(),
                });
            }
        }
        let mut expected = fx.component_classes;
        expected.sort();
        let mut got = [class_of(&fx.g, solver)?, class_of(&fx.h, solver)?];
        got.sort();
        if expected != got {
            violations.push(Violation {
                instances: vec![fx.g.clone(), fx.h.clone()],
                expected: format!("components {}, {} ({})", expected[0], expected[1], fx.name),
                got: format!("{}, {}", got[0], got[1]),
            });
        }
    }

    let small = enumerate_ptx(config.max_n, &1, (1, 1))?;
    let mut pairs: Vec<(Instance<i64>, Instance<i64>)> = Vec::new();
    for (i, g) in small.iter().enumerate() {
        for h in &small[i..] {
            pairs.push((g.clone(), h.clone()));
        }
    }
    let random_n = config.random_max_n.max(2);
    for i in 0..config.random_count as u64 {
        let base = config.seed.wrapping_add(2 * i);
        pairs.push((
            random_pt(&1, random_n, base)?,
            random_pt(&1, random_n, base.wrapping_add(1))?,
        ));
    }
    let results = pairs
        .par_iter()
        .map(|(g, h)| check_pair(g, h, solver))
        .collect::<Result<Vec<_>>>()?;
    checked += results.len();
    for r in results {
        observed.insert((r.cell, r.sum));
        violations.extend(r.violation);
    }

    let mut witnessed = 0;
    for (g, h) in [
        (OutcomeClass::L, OutcomeClass::R),
        (OutcomeClass::L, OutcomeClass::N),
        (OutcomeClass::R, OutcomeClass::N),
        (OutcomeClass::N, OutcomeClass::N),
    ] {
        for &class in table_cell(g, h).expect("no P cells") {
            if observed.contains(&((g, h), class)) {
                witnessed += 1;
            } else {
                violations.push(Violation {
                    instances: vec![],
                    expected: format!("a witness of {class} in cell {}", cell_name(g, h)),
                    got: "none".into(),
                });
            }
        }
    }

    violations.sort_by_cached_key(Violation::sort_key);
    Ok(SweepReport {
        name: "outcome-table".into(),
        instances_checked: checked,
        violations,
        seed: config.seed,
        params: params_text(config),
        notes: vec![
            format!(
                "pairs exhaustive {} random {}",
                small.len() * (small.len() + 1) / 2,
                config.random_count
            ),
            format!("multi-valued cell entries witnessed {witnessed}/12"),
        ],
    })
}

/// A game plus its negation, Left moving first on the sum, ends in a tie.
pub fn check_self_sum_tie(config: &SweepConfig) -> Result<SweepReport> {
    let mut family = enumerate_ptx(config.max_n, &1, (1, 1))?;
    let exhaustive = family.len();
    family.extend(random_family(config, 1)?);
    let found = family
        .par_iter()
        .map(|g| {
            let neg = negate_instance(g);
            let got = sum_class(g, &neg, config.solver)?;
            Ok((got != OutcomeClass::Tie).then(|| Violation {
                instances: vec![g.clone(), neg],
                expected: OutcomeClass::Tie.to_string(),
                got: got.to_string(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        name: "self-sum-tie".into(),
        instances_checked: family.len(),
        violations: sorted_violations(found),
        seed: config.seed,
        params: params_text(config),
        notes: vec![format!("exhaustive instances {exhaustive}")],
    })
}

/// Every connected labeled graph with 2..=`max_n` vertices and every start:
/// Left wins moving first on the reduction iff a Hamiltonian path starts there.
pub fn verify_reduction(config: &SweepConfig) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for n in 2..=config.max_n {
        for g in connected_graphs(n)? {
            for l in 0..n {
                cases.push((g.clone(), l));
            }
        }
    }
    let found = cases
        .par_iter()
        .map(|(g, l)| {
            let check = reduction_check(g, *l, config.solver)?;
            if check.holds() {
                return Ok(None);
            }
            Ok(Some(Violation {
                instances: vec![reduce_from_hampath(g, *l)?.instance],
                expected: format!("left wins = {}", check.hampath_from_l),
                got: format!("left wins = {}", check.left_wins),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        name: "reduction".into(),
        instances_checked: cases.len(),
        violations: sorted_violations(found),
        seed: config.seed,
        params: format!("max_n={}", config.max_n),
        notes: vec![],
    })
}

/// Random positive-weight instance where Left has a first move, drawn from
/// up to 16 sub-seeds of `seed`.
fn random_left_movable(max_n: usize, seed: u64) -> Result<Option<Instance<i64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let n = rng.gen_range(2..=max_n.max(2));
        let left_ships = if n >= 3 { rng.gen_range(1..=2) } else { 1 };
        let right_ships = rng.gen_range(0..=(n - left_ships).min(2));
        let params = RandomParams {
            vertex_count: n,
            edge_probability: rng.gen_range(0.1..0.7),
            weight_range: 1..=5,
            left_ships,
            right_ships,
            connected: rng.gen_bool(0.8),
        };
        let inst: Instance<i64> = random_instance(&params, rng.gen())?;
        if !Position::initial(&inst, Player::Left)
            .legal_moves()
            .is_empty()
        {
            return Ok(Some(inst));
        }
    }
    Ok(None)
}

/// The single-edge context turns Left's first-move result negative.
pub fn check_distinguishing_contexts(config: &SweepConfig) -> Result<SweepReport> {
    let drawn = (0..config.random_count as u64)
        .map(|i| random_left_movable(config.random_max_n, config.seed.wrapping_add(i)))
        .collect::<Result<Vec<_>>>()?;
    let skipped = drawn.iter().filter(|d| d.is_none()).count();
    let family: Vec<Instance<i64>> = drawn.into_iter().flatten().collect();
    let found = family
        .par_iter()
        .map(|g| {
            let check = check_context(g, config.solver)?;
            Ok((!check.holds()).then(|| Violation {
                instances: vec![g.clone(), check.context.clone()],
                expected: format!(
                    "left-first {} < 0, context alone >= 0",
                    check.sum_scores.s_left
                ),
                got: format!(
                    "sum {} context {}",
                    check.sum_scores.s_left, check.context_scores.s_left
                ),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        name: "distinguishing-contexts".into(),
        instances_checked: family.len(),
        violations: sorted_violations(found),
        seed: config.seed,
        params: params_text(config),
        notes: vec![format!("draws without a Left move {skipped}")],
    })
}

/// Searches random mixed-weight instances (weights in `-3..=3`, 2..=`max_n`
/// vertices, one ship a side) for one in `class`.
pub fn find_class_witness(
    class: OutcomeClass,
    max_n: usize,
    seeds: u64,
    seed: u64,
    config: SolverConfig,
) -> Result<Option<Instance<i64>>> {
    for i in 0..seeds {
        let s = seed.wrapping_add(i);
        let n = 2 + (s as usize) % max_n.saturating_sub(1).max(1);
        let params = RandomParams {
            vertex_count: n.min(max_n.max(2)),
            edge_probability: 0.5,
            weight_range: -3..=3,
            left_ships: 1,
            right_ships: 1,
            connected: true,
        };
        let inst: Instance<i64> = random_instance(&params, s)?;
        if class_of(&inst, config)? == class {
            return Ok(Some(inst));
        }
    }
    Ok(None)
}
