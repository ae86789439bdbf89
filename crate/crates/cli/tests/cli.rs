use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cheatbot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cheatbot"))
        .args(args)
        .env_remove("CHEATBOT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn value(report: &Value, key: &str) -> u64 {
    report[key]["value"].as_u64().unwrap_or_else(|| panic!("{key} missing in {report}"))
}

#[test]
fn gen_writes_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c7.txt");
    let o = cheatbot(&["gen", "cycle", "7", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "n 7 m 7 degeneracy 2");
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "7");
    assert_eq!(lines.len(), 8);

    let o = cheatbot(&["gen", "ds-icosahedron"]);
    assert!(stdout(&o).starts_with("72\n"));
    let o = cheatbot(&["gen", "product", "strong", "cycle:4", "path:3"]);
    assert!(stdout(&o).starts_with("12\n"));
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(cheatbot(&["gen", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(cheatbot(&["gen", "dodecahedron"]).status.code(), Some(2));
}

#[test]
fn param_all_on_c5() {
    let r = json(&cheatbot(&["param", "all", "cycle:5", "--no-cache"]));
    assert_eq!(r["schema"], 1);
    assert_eq!(
        (value(&r, "c_cr"), value(&r, "push_cr"), value(&r, "sigma"), value(&r, "bodyguard")),
        (2, 0, 2, 2)
    );
    for key in ["c_cr", "sigma", "bodyguard", "push_cr"] {
        assert!(r["wall_ms"][key].is_u64());
    }
}

#[test]
fn param_single_values() {
    let r = json(&cheatbot(&["param", "ccr", "k23", "--no-cache"]));
    assert_eq!(value(&r, "c_cr"), 2);
    assert!(r["sigma"].is_null());
    let r = json(&cheatbot(&["param", "push", "path:5", "--no-cache"]));
    assert_eq!(value(&r, "push_cr"), 1);
}

#[test]
fn param_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = cheatbot(&["param", "all", "cycle:4", "--no-cache", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let parsed: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
}

#[test]
fn param_fixed_cops() {
    let r = json(&cheatbot(&["param", "all", "cycle:6", "--cops", "2", "--no-cache"]));
    let fixed = r["fixed"].as_array().unwrap();
    let win = |game: &str| fixed.iter().find(|f| f["game"] == game).unwrap()["cop_win"].as_bool().unwrap();
    assert!(win("cheating_robot"));
    assert!(win("surrounding"));
    assert!(!win("bodyguard"));
    assert!(win("push"));
    assert_eq!(fixed.iter().find(|f| f["game"] == "push").unwrap()["push_budget"], 0);
}

#[test]
fn cache_answers_repeat_queries() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = json(&cheatbot(&["param", "ccr", "petersen", "--cache-dir", d]));
    let second = json(&cheatbot(&["param", "ccr", "petersen", "--cache-dir", d]));
    assert_eq!(first["cached"].as_array().unwrap().len(), 0);
    assert_eq!(second["cached"][0], "c_cr");
    assert_eq!(first["c_cr"], second["c_cr"]);
    let bypass = json(&cheatbot(&["param", "ccr", "petersen", "--cache-dir", d, "--no-cache"]));
    assert_eq!(bypass["cached"].as_array().unwrap().len(), 0);
}

#[test]
fn input_and_budget_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.txt");
    fs::write(&path, "4\n0 1\n2 3\n").unwrap();
    let o = cheatbot(&["param", "ccr", path.to_str().unwrap(), "--no-cache"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cheatbot(&["param", "ccr", "icosahedron", "--budget", "10", "--no-cache"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("estimated"));
}

#[test]
fn verify_corpus_passes() {
    let o = cheatbot(&["verify", "corpus", "--max-n", "6"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("corpus: 5 passed, 0 failed"));
    let r = json(&cheatbot(&["verify", "corpus", "--max-n", "5", "--json", "--threads", "2"]));
    assert_eq!(r["schema"], 1);
    assert_eq!(r["failed"], 0);
}

#[test]
fn trace_on_c6_never_pushes() {
    let r = json(&cheatbot(&["trace", "cycle:6", "--cops", "2"]));
    assert_eq!(r["trace"]["distinct_pushers"], 0);
    assert_eq!(r["trace"]["outcome"]["outcome"], "captured");
}

#[test]
fn trace_on_p7_records_a_push() {
    let r = json(&cheatbot(&["trace", "path:7", "--cops", "1", "--game", "push:1"]));
    assert_eq!(r["trace"]["distinct_pushers"], 1);
}

#[test]
fn traces_are_deterministic_and_checked() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("t.dot");
    let args = ["trace", "petersen", "--cops", "3", "--dot", dot.to_str().unwrap()];
    let a = cheatbot(&args);
    let dot_a = fs::read(&dot).unwrap();
    let b = cheatbot(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(dot_a, fs::read(&dot).unwrap());
    assert!(String::from_utf8(dot_a).unwrap().starts_with("graph G {"));

    let o = cheatbot(&["trace", "cycle:6", "--cops", "2", "--cop-start", "0,1", "--robber-start", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_emits_csv() {
    let o = cheatbot(&["bench", "cycle:4..10", "--cops", "1", "--engine", "psi"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("graph,n,k,engine,rep,states,transitions,iterations,wall_ms,cop_win,status")
    );
    let iterations: Vec<u64> = lines.map(|l| l.split(',').nth(7).unwrap().parse().unwrap()).collect();
    assert_eq!(iterations.len(), 7);
    assert!(iterations.windows(2).all(|w| w[0] <= w[1]), "{iterations:?}");

    let o = cheatbot(&["bench", "icosahedron", "--cops", "3", "--engine", "solver", "--budget", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with(",budget"));
}
