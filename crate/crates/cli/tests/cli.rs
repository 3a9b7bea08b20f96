use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn yangian(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(o));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn cache_files(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> = fs::read_dir(dir)
        .map(|d| d.filter_map(|e| e.ok()).map(|e| e.file_name().to_string_lossy().into_owned()).collect())
        .unwrap_or_default();
    v.sort();
    v
}

#[test]
fn enumerate_counts() {
    let dir = tempfile::tempdir().unwrap();
    for (n, big_n, count) in [(2, 2, 3), (4, 4, 13), (0, 3, 1), (3, 1, 3), (3, 3, 6)] {
        let v = json(&yangian(dir.path(), &["--N", &big_n.to_string(), "--output", "json", "enumerate", &n.to_string()]));
        assert_eq!(v["count"], count, "n = {n}, N = {big_n}");
        assert_eq!(v["partitions"].as_array().unwrap().len(), count);
    }
    let plain = stdout(&yangian(dir.path(), &["--N", "2", "enumerate", "2"]));
    assert!(plain.contains("[[1,1]]") && plain.contains("[[2]]") && plain.contains("[[1],[1]]"));
}

#[test]
fn jack_latex_displays() {
    let dir = tempfile::tempdir().unwrap();
    let one = yangian(dir.path(), &["--N", "2", "--output", "latex", "jack", "[[1]]"]);
    assert_eq!(stdout(&one).trim(), "P_{1,1}");
    let empty = yangian(dir.path(), &["--N", "2", "--output", "latex", "jack", "[]"]);
    assert_eq!(stdout(&empty).trim(), "1");
    let two = stdout(&yangian(dir.path(), &["--N", "2", "--output", "latex", "jack", "[[1,1]]"]));
    assert!(two.contains("P_{2,1}") && two.contains("P_{2,2}") && two.contains("\\frac"), "{two}");
}

#[test]
fn jack_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = yangian(dir.path(), &["--N", "2", "--output", "json", "jack", "[[1,1]]"]);
    let v = json(&o);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    let entry = &v[0];
    assert_eq!(entry["partition"], serde_json::json!([[1, 1]]));
    assert_eq!(entry["point"]["tag"], "sym");
    assert_eq!(entry["p_basis"].as_array().unwrap().len(), 3);
}

#[test]
fn probe_points_are_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let run = |seed: &str| json(&yangian(dir.path(), &["--N", "2", "--mode", "probe", "--seed", seed, "--output", "json", "jack", "[[1]]"]));
    let a = run("4");
    assert_eq!(a.as_array().unwrap().len(), 3);
    assert_eq!(a, run("4"));
    assert_ne!(a, run("5"));
    let explicit = json(&yangian(dir.path(), &["--N", "2", "--mode", "probe", "--probe", "5,-2/5", "--output", "json", "jack", "[[1]]"]));
    assert_eq!(explicit[0]["point"]["h2"], "-2/5");
}

#[test]
fn lr_one_box_square() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&yangian(dir.path(), &["--N", "2", "--mode", "probe", "--probe", "5,-2/5", "--output", "json", "lr", "[[1]]", "[[1]]"]));
    let terms = v[0]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert!(terms.iter().all(|t| t["coeff"] == "1"));
}

#[test]
fn p_basis_words_match_partition_count() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&yangian(dir.path(), &["--N", "2", "--output", "json", "p-basis", "3"]));
    assert_eq!(v[0]["words"].as_array().unwrap().len(), 5);
    let gens: Vec<String> = v[0]["generators"].as_array().unwrap().iter().map(|g| format!("{}_{}", g["n"], g["j"])).collect();
    assert_eq!(gens, ["1_1", "2_1", "2_2", "3_1", "3_2"]);
}

#[test]
fn cache_is_reused_and_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let first = stdout(&yangian(p, &["--N", "2", "jack", "[[1],[1]]"]));
    assert_eq!(cache_files(p), ["jack_v1_N2_L2_sym.json"]);
    let file = p.join("jack_v1_N2_L2_sym.json");
    let before = fs::read(&file).unwrap();

    // a smaller request is served from the larger table
    let o = yangian(p, &["--N", "2", "jack", "[[1]]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(cache_files(p), ["jack_v1_N2_L2_sym.json"]);
    assert_eq!(fs::read(&file).unwrap(), before);

    // a table with a wrong e0 relation is rejected on load
    let mut doc: Value = serde_json::from_slice(&before).unwrap();
    let text = serde_json::to_string(&doc["levels"]).unwrap();
    doc["levels"] = serde_json::from_str(&text.replacen("\"1\"", "\"7\"", 1)).unwrap();
    fs::write(&file, serde_json::to_vec(&doc).unwrap()).unwrap();
    let o = yangian(p, &["--N", "2", "jack", "[[1],[1]]"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("discarding cache file"), "{}", stderr(&o));
    assert_eq!(stdout(&o), first);

    // stale schema: notice, removal, recompute
    fs::write(p.join("jack_v0_N2_L2_sym.json"), "{}").unwrap();
    let o = yangian(p, &["--N", "2", "jack", "[[2]]"]);
    assert!(stderr(&o).contains("schema v0"), "{}", stderr(&o));
    assert_eq!(cache_files(p), ["jack_v1_N2_L2_sym.json"]);

    let status = json(&yangian(p, &["--output", "json", "cache", "status"]));
    assert_eq!(status["entries"].as_array().unwrap().len(), 1);
    assert_eq!(status["entries"][0]["level"], 2);
    let cleared = json(&yangian(p, &["--output", "json", "cache", "clear"]));
    assert_eq!(cleared["removed"], 1);
    assert!(cache_files(p).is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    for args in [
        vec!["frobnicate"],
        vec!["jack", "[[1"],
        vec!["--N", "2", "jack", "[[3]]"],
        vec!["--N", "2", "--max-level", "2", "jack", "[[1,1,1]]"],
        vec!["--mode", "probe", "--probe", "1,1", "jack", "[[1]]"],
        vec!["--mode", "probe", "--probe", "5", "jack", "[[1]]"],
        vec!["--N", "0", "enumerate", "1"],
        vec!["verify", "everything"],
        vec!["--output", "yaml", "enumerate", "1"],
    ] {
        let o = yangian(p, &args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn verify_reports() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let lr = json(&yangian(p, &["--N", "2", "--max-level", "4", "--output", "json", "verify", "lr"]));
    assert_eq!(lr["ok"], true);
    let checks = lr["reports"][0]["checks"].as_array().unwrap();
    let status = |name: &str| checks.iter().find(|c| c["name"] == name).map(|c| c["status"].clone()).unwrap();
    assert_eq!(status("LR y-column"), "pass");
    assert_eq!(status("commutativity"), "pass");
    assert_eq!(status("LR yyx"), "deviation");

    let lr_probe = yangian(p, &["--N", "2", "--mode", "probe", "--probe", "5,-2/5", "verify", "lr"]);
    assert_eq!(lr_probe.status.code(), Some(0), "{}", stdout(&lr_probe));

    let deg = yangian(p, &["--output", "plain", "verify", "degenerations"]);
    assert_eq!(deg.status.code(), Some(0));
    assert!(stdout(&deg).contains("all checks passed"));

    let jack = yangian(p, &["--N", "2", "--max-level", "3", "verify", "jack"]);
    assert_eq!(jack.status.code(), Some(0), "{}", stdout(&jack));
}
