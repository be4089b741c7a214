use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-qexp"))
        .args(args)
        .env_remove("HOPFQEXP_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn sweedler_twist(dir: &Path, name: &str, entries: &[(usize, usize)]) -> String {
    let mut j = vec![vec![json!(["0"]); 4]; 4];
    for &(a, b) in entries {
        j[a][b] = json!(["1"]);
    }
    let path = dir.join(name);
    fs::write(&path, json!({"algebra": "sweedler", "J": j}).to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn qexp_of_sweedler() {
    let o = run(&["qexp", "--preset", "sweedler", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json_of(&o);
    assert_eq!(v["schema"], "hopf-qexp/1");
    assert_eq!(v["qexp"], 2);
    assert_eq!(v["exponent"], "infinite");
    assert_eq!(v["s2_order"], 2);
    assert_eq!(v["unipotency_index"], 2);
}

#[test]
fn qexp_text_report() {
    let o = run(&["qexp", "--preset", "taft:3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("qexp:             3"), "{s}");
    assert!(s.contains("exponent:         infinite"), "{s}");
}

#[test]
fn cross_check_on_group_algebra() {
    let o = run(&["qexp", "--preset", "group:builtin:S3", "--cross-check", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json_of(&o);
    assert_eq!(v["qexp"], 6);
    assert_eq!(v["exponent"], 6);
    assert_eq!(v["cross_checked"], true);
}

#[test]
fn regular_route_matches() {
    let t = json_of(&run(&["qexp", "--preset", "sweedler", "--format", "json"]));
    let r = json_of(&run(&["qexp", "--preset", "sweedler", "--route", "regular", "--format", "json"]));
    assert_eq!(t["min_poly"], r["min_poly"]);
    assert_eq!(r["route"], "regular");
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["qexp", "--preset", "uqb2:3", "--format", "json"][..],
        &["double", "--preset", "sweedler", "--format", "json"][..],
        &["preset", "group:builtin:S3", "--format", "json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn bound_exceeded_is_a_check_failure() {
    let o = run(&["qexp", "--preset", "sweedler", "--bound", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bound"));
    let o = Command::new(env!("CARGO_BIN_EXE_hopf-qexp"))
        .args(["qexp", "--preset", "taft:5"])
        .env("HOPFQEXP_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unknown_preset_is_an_input_error() {
    let o = run(&["qexp", "--preset", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nosuch"));
}

#[test]
fn validate_round_trip_and_broken_antipode() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("sweedler.json");
    let o = run(&["preset", "sweedler", "--out", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["validate", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("valid: sweedler"));

    let mut v: Value = serde_json::from_str(&fs::read_to_string(&good).unwrap()).unwrap();
    v["antipode"][2][3] = json!(["1"]);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, v.to_string()).unwrap();
    let o = run(&["validate", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("antipode"), "{}", stderr(&o));
}

#[test]
fn malformed_json_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.json");
    fs::write(&p, "{\"dim\": 2").unwrap();
    assert_eq!(run(&["qexp", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn grouplikes_and_s2_order() {
    let v = json_of(&run(&["grouplikes", "--preset", "taft:4", "--format", "json"]));
    assert_eq!(v["grouplikes"].as_array().unwrap().len(), 4);
    assert_eq!(v["exponent"], 4);
    let v = json_of(&run(&["s2-order", "--preset", "taft:4", "--format", "json"]));
    assert_eq!(v["s2_order"], 4);
}

#[test]
fn double_reports_r_matrix() {
    let o = run(&["double", "--preset", "group:builtin:Z2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json_of(&o);
    assert_eq!(v["dim"], 4);
    assert!(v["r_matrix"].is_array());
}

#[test]
fn twist_check_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = sweedler_twist(dir.path(), "good.json", &[(0, 0), (2, 3)]);
    let o = run(&["twist-check", "--twist", &good, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json_of(&o);
    assert_eq!(v["is_twist"], true);
    assert_eq!(v["q_ratio_identity"], true);

    let bad = sweedler_twist(dir.path(), "bad.json", &[(0, 0), (2, 2)]);
    let o = run(&["twist-check", "--twist", &bad, "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_of(&o)["is_twist"], false);
}

#[test]
fn twist_apply_emits_a_valid_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let twist = sweedler_twist(dir.path(), "j.json", &[(0, 0), (2, 3)]);
    let out = dir.path().join("hj.json");
    let o = run(&["twist-apply", "--twist", &twist, "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["qexp", "--in", out.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json_of(&o)["qexp"], 2);
}

#[test]
fn preset_list() {
    let v = json_of(&run(&["preset", "--list", "--format", "json"]));
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"sweedler"));
    assert!(names.contains(&"uqsl2:3"));
}

#[test]
fn suite_passes_on_small_presets() {
    let o = run(&["suite", "--max-dim", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json_of(&o);
    assert_eq!(v["schema"], "hopf-qexp-suite/1");
    assert_eq!(v["failed"], 0);
    let items = v["items"].as_array().unwrap();
    assert!(items.iter().any(|i| i["property"] == "alternating-r-sums"));
    let keys: Vec<(String, String)> = items
        .iter()
        .map(|i| (i["property"].as_str().unwrap().into(), i["subject"].as_str().unwrap().into()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}
