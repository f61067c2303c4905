use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn pirates(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pirates"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn solve_worked_example() {
    let out = pirates(&["solve", &path("fig_ex.pt"), "--first", "both"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("s_L=2 s_R=2 class L\n"), "{text}");
    assert!(text.contains("line: L: 0->1 (+4), R: 5->3 (-3), L: 1->2 (+2), R: 3->4 (-1)"));
    assert!(out.stderr.is_empty());
}

#[test]
fn solve_kv() {
    let out = pirates(&["solve", &path("fig_ex1.pt"), "--first", "left", "--kv"]);
    let text = stdout(&out);
    assert!(
        text.contains("s_L=1\n") && text.contains("best_left=L0->1\n"),
        "{text}"
    );
    assert!(!text.contains("best_right"));
}

#[test]
fn classify_moveless_instance_is_tie() {
    let dir = std::env::temp_dir().join(format!("pirates-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("stuck.pt");
    std::fs::write(&file, "vertices 2\nv 0 ship L\nv 1 ship R\n").unwrap();
    let out = pirates(&["classify", file.to_str().unwrap()]);
    assert_eq!(stdout(&out), "TIE\n");
    let out = pirates(&["solve", file.to_str().unwrap(), "--kv"]);
    assert!(stdout(&out).starts_with("s_L=0\ns_R=0\nclass=TIE\n"));
}

#[test]
fn sum_of_table_fixture() {
    let out = pirates(&[
        "sum",
        &path("tab_case3_1a.pt"),
        &path("tab_case3_1b.pt"),
        "--kv",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("class=TIE\n"));
}

#[test]
fn negate_twice_is_identity() {
    let once = stdout(&pirates(&["negate", &path("fig_ex.pt")]));
    let dir = std::env::temp_dir().join(format!("pirates-neg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("neg.pt");
    std::fs::write(&file, &once).unwrap();
    let twice = stdout(&pirates(&["negate", file.to_str().unwrap()]));
    let original = std::fs::read_to_string(fixture("fig_ex.pt")).unwrap();
    let canonical: pirates_core::Instance = original.parse().unwrap();
    assert_eq!(twice, canonical.to_string());
}

#[test]
fn tree_and_rational() {
    let out = pirates(&["tree", &path("fig_half.pt")]);
    assert_eq!(stdout(&out), "{1,{.|1|0}|0|{0|-1|.}}\n");
    let out = pirates(&["--rational", "classify", &path("fig_half.pt")]);
    assert_eq!(stdout(&out), "L\n");
}

#[test]
fn reduce_and_oracle() {
    let dir = std::env::temp_dir().join(format!("pirates-graph-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("p4.pt");
    std::fs::write(&file, "vertices 4\ne 0 1\ne 1 2\ne 2 3\n").unwrap();
    let f = file.to_str().unwrap();
    assert_eq!(stdout(&pirates(&["oracle", f, "--start", "0"])), "true\n");
    assert_eq!(stdout(&pirates(&["oracle", f, "--start", "1"])), "false\n");
    let reduced = stdout(&pirates(&["reduce", f, "--at", "0"]));
    assert!(reduced.starts_with("vertices 7\n"), "{reduced}");
    assert!(reduced.contains("v 4 ship R\n"));
}

#[test]
fn verify_reports_and_ignores_jobs() {
    let one = pirates(&[
        "verify", "pt-x", "--max-n", "4", "--seeds", "200", "--jobs", "1",
    ]);
    let four = pirates(&[
        "verify", "pt-x", "--max-n", "4", "--seeds", "200", "--jobs", "4",
    ]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert!(stdout(&one).contains("violations=0\n"));
    let out = pirates(&["verify", "reduction", "--max-n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("checked=3806 violations=0"));
}

#[test]
fn compare_add() {
    let out = pirates(&["compare", &path("fig_add_a.pt"), &path("fig_add_b.pt")]);
    let text = stdout(&out);
    assert!(
        text.contains("right first:\n  scoring best: R0->2\n  normal best:  R0->2"),
        "{text}"
    );
}

#[test]
fn generate_is_deterministic() {
    let a = pirates(&[
        "generate",
        "random",
        "--vertices",
        "7",
        "--seed",
        "5",
        "--connected",
    ]);
    let b = pirates(&[
        "generate",
        "random",
        "--vertices",
        "7",
        "--seed",
        "5",
        "--connected",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let grid = stdout(&pirates(&[
        "generate", "grid", "--n", "3", "--m", "2", "--left", "1,1", "--right", "3,2",
    ]));
    assert!(grid.starts_with("vertices 6\nv 0 ship L\n"));
    assert_eq!(grid.lines().filter(|l| l.starts_with("e ")).count(), 7);
}

#[test]
fn exit_codes() {
    assert_eq!(pirates(&["solve", "missing.pt"]).status.code(), Some(2));
    assert_eq!(pirates(&["frobnicate"]).status.code(), Some(2));
    let out = pirates(&["--max-nodes", "3", "solve", &path("fig_ex.pt")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let out = pirates(&["verify", "pt-x", "--max-n", "3", "--seeds", "10"]);
    assert_eq!(out.status.code(), Some(0));
}
