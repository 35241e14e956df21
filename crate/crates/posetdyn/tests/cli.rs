//! End-to-end runs of the command-line binary: formats, exit codes,
//! determinism across --jobs.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_posetdyn"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    let mut child = bin()
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn build_and_show() {
    let out = run(&["build", "rect:2x3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("\"n\":6"));
    // reparse through stdin
    let shown = run_stdin(&["show", "-"], &text);
    assert!(shown.status.success());
    let summary = stdout_of(&shown);
    assert!(summary.contains("\"rank\": 3"));
    assert!(summary.contains("\"is_graded\": true"));
    // --out writes the same JSON to a file
    let path = std::env::temp_dir().join(format!("posetdyn-out-{}.json", std::process::id()));
    let out = run(&["build", "rect:2x3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text.trim_end());
    let _ = std::fs::remove_file(&path);
}

#[test]
fn search_convention_flag() {
    let out = run(&["nrp", "search", "--max-n", "4", "--convention", "chains"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"convention\": \"EqualChains\""));
}

#[test]
fn usage_and_format_errors_exit_2() {
    let out = run(&["build", "garbage:9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    // tableau with an out-of-range label
    let bad = r#"{"poset":{"n":2,"covers":[[0,1]]},"q":2,"labels":[0,1]}"#;
    let out = run_stdin(&["promote", "-"], bad);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn promote_evacuate_orbit() {
    let tableau = r#"{"poset":{"n":2,"covers":[[0,1]]},"q":3,"labels":[1,3]}"#;
    let out = run_stdin(&["promote", "-"], tableau);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"labels\":[2,3]"));
    // --steps 3 returns to the start
    let out = run_stdin(&["promote", "-", "--steps", "3"], tableau);
    assert!(stdout_of(&out).contains("\"labels\":[1,3]"));
    // inverse of promotion, both spellings
    let out = run_stdin(&["promote", "-", "--inverse"], tableau);
    assert!(stdout_of(&out).contains("\"labels\":[1,2]"));
    let out = run_stdin(&["promote", "-", "--steps", "-1"], tableau);
    assert!(stdout_of(&out).contains("\"labels\":[1,2]"));
    let out = run_stdin(&["evacuate", "-"], tableau);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"labels\":[1,3]"));
    let out = run_stdin(&["orbit", "-"], tableau);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"cardinality\":3"));
}

#[test]
fn rowmotion_on_weak_labelings() {
    // diamond with c=1: the empty ideal maps to the singleton {bottom}
    let ideal = r#"{"poset":{"n":4,"covers":[[0,1],[0,2],[1,3],[2,3]]},"q":1,"labels":[0,0,0,0]}"#;
    let out = run_stdin(&["rowmotion", "-"], ideal);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"labels\":[1,0,0,0]"));
    // four steps return to the empty ideal (orbit size rank+2 = 4)
    let out = run_stdin(&["rowmotion", "-", "--steps", "4"], ideal);
    assert!(stdout_of(&out).contains("\"labels\":[0,0,0,0]"));
    let out = run_stdin(&["orbit", "-", "--rowmotion"], ideal);
    assert!(stdout_of(&out).contains("\"cardinality\":4"));
}

#[test]
fn census_output() {
    let out = run(&["census", "--q", "4", "--packed", "chain:1 + antichain:3 + chain:1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("\"total_states\":6"));
    assert!(text.contains("\"size\":2"));
    assert!(text.contains("\"count\":3"));
    // rowmotion census via --c
    let out = run(&["census", "--c", "1", "rect:2x2"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"total_states\":6"));
    // needs exactly one of --q/--c
    let out = run(&["census", "rect:2x2"]);
    assert_eq!(out.status.code(), Some(2));
    // text format
    let out = run(&["--format", "text", "census", "--q", "4", "rect:2x2"]);
    assert!(stdout_of(&out).contains("orbit(s) of size"));
}

#[test]
fn nrp_check_exit_codes() {
    let out = run(&["nrp", "check", "rect:2x3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"is_nrp\":true"));
    let out = run(&["nrp", "check", "bee-hummingbird"]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout_of(&out);
    assert!(text.contains("\"is_nrp\":false"));
    assert!(text.contains("\"orbit_size\":5"));
    assert!(text.contains("\"labels\""), "witness tableau must be printed");
    // early exit reports a single witness
    let out = run(&["nrp", "check", "bee-hummingbird", "--early-exit"]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn nrp_search_resumes_and_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("posetdyn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ckpt = dir.join("ckpt.json");
    let out1 = run(&[
        "nrp",
        "search",
        "--max-n",
        "6",
        "--resume",
        ckpt.to_str().unwrap(),
    ]);
    assert!(out1.status.success());
    assert!(ckpt.exists(), "checkpoint file written");
    // resumed run extends the same checkpoint and agrees with a fresh run
    let out2 = run(&[
        "nrp",
        "search",
        "--max-n",
        "7",
        "--resume",
        ckpt.to_str().unwrap(),
        "--jobs",
        "1",
    ]);
    assert!(out2.status.success());
    let fresh = run(&["nrp", "search", "--max-n", "7", "--resume", dir.join("fresh.json").to_str().unwrap(), "--jobs", "3"]);
    assert_eq!(stdout_of(&out2), stdout_of(&fresh), "resume/jobs must not change output");
    let text = stdout_of(&out2);
    assert!(text.contains("\"convention\""));
    assert!(text.contains("minuscule: rect:1x7"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn export_dot() {
    let out = run(&["export", "dot", "chain:3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.matches("->").count(), 2);
    let out = run(&["export", "dot", "--color", "propeller:3"]);
    assert!(!stdout_of(&out).contains("fillcolor=black"));
    let out = run(&["export", "dot", "--color", "rect:3x5"]);
    assert_eq!(stdout_of(&out).matches("fillcolor=black").count(), 3);
}

#[test]
fn cache_dir_stores_exceptional_posets() {
    let dir = std::env::temp_dir().join(format!("posetdyn-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let fresh = bin()
        .args(["build", "cayley-moufang"])
        .env("POSETDYN_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(fresh.status.success());
    let cached_file = dir.join("cayley-moufang.json");
    assert!(cached_file.exists(), "cache file written");
    // a second run reads the cache and produces identical output
    let again = bin()
        .args(["build", "cayley-moufang"])
        .env("POSETDYN_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(stdout_of(&fresh), stdout_of(&again));
    // a corrupted cache entry is ignored and rebuilt
    std::fs::write(&cached_file, r#"{"n":2,"covers":[[0,1]]}"#).unwrap();
    let rebuilt = bin()
        .args(["build", "cayley-moufang"])
        .env("POSETDYN_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(stdout_of(&fresh), stdout_of(&rebuilt));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_suites_run() {
    let out = run(&["verify", "empty-orbit"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("PASS suite empty-orbit"));
    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}
