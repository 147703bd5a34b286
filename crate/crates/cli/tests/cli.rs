//! End-to-end tests of the binary: exit codes, output determinism,
//! round-trips, and interactive play transcripts.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use orbitgames_cli::doc::{doc_from_action, groupoid_doc, InstanceDoc};
use orbitgames_core::catalog::{fixture, fixture_names};
use orbitgames_core::groupoids::action_groupoid;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_orbitgames"))
}

fn write_fixture(dir: &tempfile::TempDir, name: &str) -> PathBuf {
    let inst = fixture(name).expect("fixture");
    let path = dir.path().join(format!("{name}.json"));
    std::fs::write(&path, doc_from_action(name, &inst.action).emit()).unwrap();
    path
}

fn run_ok(cmd: &mut Command) -> String {
    let out = cmd.output().unwrap();
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn run_code(cmd: &mut Command) -> (i32, String) {
    let Output { status, stdout, .. } = cmd.output().unwrap();
    (status.code().unwrap(), String::from_utf8(stdout).unwrap())
}

#[test]
fn orbits_on_the_swap_action() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "discrete2-z2");
    let out = run_ok(bin().arg("orbits").arg(&path));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["orbits"], serde_json::json!([[0, 1]]));
}

#[test]
fn becker_pair_on_sierpinski() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "sierpinski-trivial");
    let out = run_ok(bin().arg("becker").arg(&path).args(["0", "1"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ii_wins"], serde_json::json!(true));
    assert_eq!(v["witness"], serde_json::json!(0));
    let out = run_ok(bin().arg("becker").arg(&path).args(["1", "0"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ii_wins"], serde_json::json!(false));
}

#[test]
fn dot_output_is_the_golden_text() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "sierpinski-trivial");
    let out = run_ok(
        bin()
            .arg("graphs")
            .arg(&path)
            .args(["--kind", "becker", "--format", "dot"]),
    );
    assert_eq!(
        out,
        "digraph becker {\n  \"0\";\n  \"1\";\n  \"0\" -> \"0\";\n  \"0\" -> \"1\";\n  \"1\" -> \"1\";\n}\n"
    );
}

#[test]
fn outputs_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "indiscrete2-trivial");
    for sub in ["obstruction", "turbulence"] {
        let first = run_ok(bin().arg(sub).arg(&path));
        let second = run_ok(bin().arg(sub).arg(&path));
        assert_eq!(first, second, "{sub} output varies between runs");
    }
    let first = run_ok(bin().arg("hjorth").arg(&path).arg("--all"));
    let second = run_ok(bin().arg("hjorth").arg(&path).arg("--all"));
    assert_eq!(first, second);
}

#[test]
fn worker_count_does_not_change_the_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "discrete3-z3");
    let default = run_ok(bin().arg("becker").arg(&path).arg("--all"));
    let single = run_ok(
        bin()
            .arg("becker")
            .arg(&path)
            .arg("--all")
            .env("ORBITGAMES_THREADS", "1"),
    );
    let many = run_ok(
        bin()
            .arg("becker")
            .arg(&path)
            .arg("--all")
            .env("ORBITGAMES_THREADS", "7"),
    );
    assert_eq!(default, single);
    assert_eq!(default, many);
}

#[test]
fn gen_round_trips_through_parse() {
    let dir = tempfile::tempdir().unwrap();
    for name in fixture_names() {
        let inst = fixture(&name).unwrap();
        let doc = doc_from_action(&name, &inst.action);
        let parsed = InstanceDoc::parse(&doc.emit()).unwrap();
        assert_eq!(parsed, doc, "{name}");
        // The emitted document must satisfy the validator.
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, doc.emit()).unwrap();
        let (code, _) = run_code(bin().arg("validate").arg(&path));
        assert_eq!(code, 0, "{name} fails validation");
    }
}

#[test]
fn gen_emits_byte_identical_documents() {
    let out1 = run_ok(bin().args(["gen", "--catalog", "sierpinski-trivial"]));
    let out2 = run_ok(bin().args(["gen", "--catalog", "sierpinski-trivial"]));
    assert_eq!(out1, out2);
    let listing = run_ok(bin().args(["gen", "--catalog", "list"]));
    assert!(listing.lines().any(|l| l == "sierpinski-trivial"));
}

#[test]
fn groupoid_section_round_trips_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let inst = fixture("discrete2-z2").unwrap();
    let mut doc = doc_from_action("discrete2-z2", &inst.action);
    doc.groupoid = Some(groupoid_doc(&action_groupoid(&inst.action)));
    doc.structures = Some(vec![orbitgames_cli::doc::StructureDoc {
        universe_size: 2,
        relations: vec![orbitgames_cli::doc::RelationDoc {
            name: "E".to_string(),
            arity: 2,
            tuples: vec![vec![0, 1]],
        }],
    }]);
    doc.sequences = Some(vec![vec!["a".to_string(), "b".to_string()]]);
    let parsed = InstanceDoc::parse(&doc.emit()).unwrap();
    assert_eq!(parsed, doc);
    let path = dir.path().join("full.json");
    std::fs::write(&path, doc.emit()).unwrap();
    let (code, out) = run_code(bin().arg("validate").arg(&path));
    assert_eq!(code, 0, "{out}");
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "not json at all").unwrap();
    let (code, _) = run_code(bin().arg("validate").arg(&bad));
    assert_eq!(code, 2, "malformed document is a parse error");

    let missing = dir.path().join("missing.json");
    let (code, _) = run_code(bin().arg("orbits").arg(&missing));
    assert_eq!(code, 4, "unreadable input is an io error");

    let path = write_fixture(&dir, "sierpinski-trivial");
    let (code, _) = run_code(bin().arg("becker").arg(&path).args(["0", "7"]));
    assert_eq!(code, 3, "out-of-range point is a semantic error");

    // An instance violating the group axioms validates with exit 3 and a
    // violation dump.
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["group"]["inv"] = serde_json::json!([0]);
    v["group"]["mult"] = serde_json::json!([0]);
    v["space"]["basis"] = serde_json::json!([[1]]);
    let invalid = dir.path().join("invalid.json");
    std::fs::write(&invalid, serde_json::to_string(&v).unwrap()).unwrap();
    let (code, out) = run_code(bin().arg("validate").arg(&invalid));
    assert_eq!(code, 3);
    assert!(out.contains("basis-covers"));
}

#[test]
fn oracle_diff_families_report_clean() {
    for family in ["spaces", "sequences", "diag"] {
        let (code, out) = run_code(bin().args(["oracle-diff", "--family", family]));
        assert_eq!(code, 0, "{family}: {out}");
        assert!(out.contains("zero mismatches"), "{family}: {out}");
    }
}

#[test]
fn play_as_the_winning_side_survives() {
    // In the Becker game on the Sierpinski fixture Player II wins (0, 1);
    // the human plays I, feeding any legal choices, and the engine's II
    // survives to the truncation bound.
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "sierpinski-trivial");
    let mut child = bin()
        .arg("play")
        .arg(&path)
        .args(["0", "1", "--as", "I"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let stdin = child.stdin.as_mut().unwrap();
        for _ in 0..12 {
            if stdin.write_all(b"1\n").is_err() {
                break;
            }
        }
    }
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success());
    assert!(
        text.contains("Player II wins (safety holds forever)"),
        "transcript:\n{text}"
    );
}

#[test]
fn play_as_the_losing_side_is_beaten() {
    // On two discrete points with the trivial group, Player I wins (0, 1):
    // the human's II is pushed into the violation.
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "discrete2-trivial");
    let mut child = bin()
        .arg("play")
        .arg(&path)
        .args(["0", "1", "--as", "II"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let stdin = child.stdin.as_mut().unwrap();
        for _ in 0..12 {
            if stdin.write_all(b"1\n").is_err() {
                break;
            }
        }
    }
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success());
    assert!(
        text.contains("Solver verdict: Player I wins"),
        "transcript:\n{text}"
    );
    assert!(
        text.contains("Unsafe position entered: Player I wins."),
        "transcript:\n{text}"
    );
}

#[test]
fn illegal_moves_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "sierpinski-trivial");
    let mut child = bin()
        .arg("play")
        .arg(&path)
        .args(["0", "1", "--as", "I"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let stdin = child.stdin.as_mut().unwrap();
        stdin.write_all(b"99\nzzz\nq\n").unwrap();
    }
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Illegal move \"99\""), "transcript:\n{text}");
    assert!(text.contains("Illegal move \"zzz\""), "transcript:\n{text}");
    assert!(text.contains("Quit."), "transcript:\n{text}");
}

#[test]
fn ranks_reports_a_stable_hierarchy() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(&dir, "sierpinski-trivial");
    let out = run_ok(bin().arg("ranks").arg(&path).args(["0", "1"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["game"], "hjorth");
    assert_eq!(v["ii_wins"], serde_json::json!(false));
    let related: Vec<bool> = v["related_at"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_bool().unwrap())
        .collect();
    assert!(related.windows(2).all(|w| w[0] || !w[1]), "antitone");
    assert!(!(*related.last().unwrap()), "stable value matches verdict");
}
