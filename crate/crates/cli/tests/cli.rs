use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn c123(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_c123")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const C5: &str = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n";
const K3: &str = "n 3\ne 0 1\ne 1 2\ne 2 0\n";
const K2: &str = "n 2\ne 0 1\n";

#[test]
fn hom_answers_through_the_exit_code() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5", C5);
    let k3 = write(&dir, "k3", K3);
    let k2 = write(&dir, "k2", K2);

    let yes = c123(&["hom", "--g", s(&c5), "--h", s(&k3)]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("yes"));

    let no = c123(&["hom", "--g", s(&c5), "--h", s(&k2)]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no).trim(), "no");
}

#[test]
fn malformed_graph_names_the_line() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad", "n 2\ne 0 5\n");
    let k2 = write(&dir, "k2", K2);
    let out = c123(&["hom", "--g", s(&bad), "--h", s(&k2)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(c123(&["nonsense"]).status.code(), Some(2));
    assert_eq!(c123(&["width", "--measure", "pw"]).status.code(), Some(2));
    assert_eq!(c123(&["--help"]).status.code(), Some(0));
}

#[test]
fn classify_the_claw() {
    let dir = TempDir::new().unwrap();
    let claw = write(&dir, "claw", "n 4\ne 0 1\ne 0 2\ne 0 3\n");
    let out = c123(&["classify", "--h", s(&claw)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("EfficientlySolvable"));

    let k3 = write(&dir, "k3", K3);
    let out = c123(&["classify", "--h", s(&k3)]);
    assert!(!stdout(&out).starts_with("EfficientlySolvable"), "{}", stdout(&out));
}

#[test]
fn pathwidth_certificate_is_written() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5", C5);
    let cert = dir.path().join("cert");
    let out = c123(&["width", "--g", s(&c5), "--measure", "pw", "--certificate", s(&cert)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "pw 2");
    let text = std::fs::read_to_string(&cert).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("b ")).all(|l| l.split_whitespace().count() <= 4));
}

#[test]
fn edp_yes_and_no() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5", C5);
    let yes = c123(&["edp", "--g", s(&c5), "--pairs", "0-1,2-4"]);
    assert_eq!(yes.status.code(), Some(0), "{}", stdout(&yes));
    let no = c123(&["edp", "--g", s(&c5), "--pairs", "0-2,1-3"]);
    assert_eq!(no.status.code(), Some(1));
}

#[test]
fn qbf_reduction_writes_every_artefact() {
    let dir = TempDir::new().unwrap();
    let qbf = write(
        &dir,
        "f.json",
        r#"{"prefix":[["Forall",0],["Exists",1]],"clauses":[[{"var":0,"negated":false},{"var":1,"negated":false}]]}"#,
    );
    let sentence = dir.path().join("q.json");
    let graph = dir.path().join("g.txt");
    let decomposition = dir.path().join("d.txt");
    let out = c123(&[
        "reduce",
        "qbf-to-qcsp",
        "--in",
        s(&qbf),
        "--out",
        s(&sentence),
        "--emit-graph",
        s(&graph),
        "--emit-decomposition",
        s(&decomposition),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let q: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&sentence).unwrap()).unwrap();
    assert!(q["prefix"].as_array().is_some_and(|p| !p.is_empty()));
    assert!(std::fs::read_to_string(&graph).unwrap().starts_with("n "));
    assert!(std::fs::read_to_string(&decomposition).unwrap().contains("\nb "));

    // ∀x ∃y (x ∨ y) is true, and so is its image.
    let eval = c123(&["qcsp", "eval", "--in", s(&sentence)]);
    assert_eq!(eval.status.code(), Some(0), "{}", stdout(&eval));
}

#[test]
fn verify_three_colouring_suite() {
    let out = c123(&["verify", "reduction-3col", "--n", "4", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("agrees=true"));
}

#[test]
fn generated_graph_corpus_has_the_known_size() {
    let out = c123(&["generate", "graphs", "--n", "5", "--connected"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    // Connected graphs on 1 to 5 vertices: 1 + 1 + 2 + 6 + 21.
    assert_eq!(lines.len(), 31);
    let on_five = lines
        .iter()
        .filter(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["n"] == 5)
        .count();
    assert_eq!(on_five, 21);
}

#[test]
fn game_solve_reports_the_winner() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3", "n 3\ne 0 1\ne 1 2\n");
    let out = c123(&["game", "solve", "--g", s(&p3), "--order", "0,2,1", "--k", "2"]);
    assert!(stdout(&out).starts_with("winner Universal"), "{}", stdout(&out));
    let out = c123(&["game", "solve", "--g", s(&p3), "--order", "0,2,1", "--k", "3"]);
    assert!(stdout(&out).starts_with("winner Existential"), "{}", stdout(&out));
}
