use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qbforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbforge"))
        .args(args)
        .env_remove("QBFORGE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = qbforge(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).unwrap_or(Value::Null))
}

fn write_catalog(dir: &Path, name: &str) -> String {
    let path = dir.join("alg.json");
    let o = qbforge(&["catalog", name, "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    path.to_str().unwrap().to_string()
}

#[test]
fn validate_godel3_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_catalog(dir.path(), "godel:3");
    let (code, v) = json(&["validate", &path]);
    assert_eq!(code, 0);
    let classes: Vec<&str> = v["data"]["classes"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    for c in ["integral", "residuated", "join_semilattice", "pseudo_hoop", "pseudo_mtl"] {
        assert!(classes.contains(&c), "{c}");
    }
    assert_eq!(v["command"][1], "validate");
}

#[test]
fn corrupted_table_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_catalog(dir.path(), "godel:3");
    let text = std::fs::read_to_string(&path).unwrap();
    let bad = text.replacen(r#"["0", "1", "1"]"#, r#"["a", "1", "1"]"#, 1);
    assert_ne!(bad, text);
    std::fs::write(&path, bad).unwrap();
    let o = qbforge(&["validate", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("quantum_b: FAILS"));
    assert!(stdout(&o).contains("qb.adjoint at (a, a, 0)"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    std::fs::write(&path, r#"{"name": "x", "elements": ["1", "1"], "leq": [], "to": [], "lto": []}"#).unwrap();
    assert_eq!(qbforge(&["validate", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(qbforge(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(qbforge(&["validate", "@no-such-entry"]).status.code(), Some(2));
    assert_eq!(qbforge(&["quantale", "@godel:3", "--op", "umul", "--x", "{0}", "--y", "{1}"]).status.code(), Some(2));
    assert_eq!(qbforge(&["search", "--size", "6", "--class", "quantum-b"]).status.code(), Some(2));
    assert_eq!(qbforge(&["search", "--size", "3", "--where", "PF =="]).status.code(), Some(2));
}

#[test]
fn one_element_algebra_is_in_every_class() {
    let (code, v) = json(&["validate", "@trivial"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["classes"].as_array().unwrap().len(), 16);
    let o = qbforge(&["witness", "@trivial"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "none");
}

#[test]
fn filter_counts_and_prime_flags() {
    let (code, v) = json(&["filters", "@godel:3", "--primes"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["filters"].as_array().unwrap().len(), 3);
    assert!(v["data"]["primes"].as_array().unwrap().iter().all(|p| p["prime"] == true));

    let (_, v) = json(&["filters", "@lukasiewicz:3"]);
    assert_eq!(v["data"]["filters"].as_array().unwrap().len(), 2);

    let (code, v) = json(&["filters", "@heyting-d5", "--primes"]);
    assert_eq!(code, 0);
    let unit = v["data"]["primes"].as_array().unwrap().iter().find(|p| p["filter"] == serde_json::json!(["1"])).unwrap();
    assert_eq!(unit["vee_prime"], true);
    assert_eq!(unit["to_prime"], false);
    let o = qbforge(&["filters", "@heyting-d5", "--primes"]);
    assert!(stdout(&o).contains("<- ∨-prime, not →-prime"));
}

#[test]
fn quantale_operations() {
    let (_, v) = json(&["quantale", "@chain:2", "--op", "umul", "--x", "{1}", "--y", "{1}"]);
    assert_eq!(v["data"]["result"], serde_json::json!(["1"]));
    let (_, v) = json(&["quantale", "@godel:3", "--op", "umul", "--x", "{a,1}", "--y", "{}"]);
    assert_eq!(v["data"]["result"], serde_json::json!([]));
    let (_, v) = json(&["quantale", "@godel:3", "--op", "resl", "--x", "{a,1}", "--y", "{0,a,1}"]);
    assert_eq!(v["data"]["result"], serde_json::json!(["0", "a", "1"]));
    let (code, v) = json(&["quantale", "@godel:3", "--op", "invres-right", "--x", "{1}", "--y", "{a,1}", "--laws"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["result"], serde_json::json!(["a", "1"]));
    assert_eq!(v["verdicts"][0]["name"], "quantale_laws");
}

#[test]
fn sampled_laws_are_seeded() {
    let a = stdout(&qbforge(&["quantale", "@prod(godel:3,godel:3)", "--samples", "200", "--seed", "7", "--format", "json"]));
    let b = stdout(&qbforge(&["quantale", "@prod(godel:3,godel:3)", "--samples", "200", "--seed", "7", "--format", "json"]));
    assert_eq!(a, b);
    let o = Command::new(env!("CARGO_BIN_EXE_qbforge"))
        .args(["quantale", "@godel:6", "--laws"])
        .env("QBFORGE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("sampling"));
}

#[test]
fn polar_and_witness() {
    let (code, v) = json(&["polar", "@prod(chain:2,chain:2)", "--set", "(0,1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["polar"], serde_json::json!(["(1,0)", "(1,1)"]));
    assert_eq!(qbforge(&["polar", "@cyclic:2", "--set", "e"]).status.code(), Some(2));
    let o = qbforge(&["witness", "@godel:4"]);
    assert_eq!(stdout(&o).trim(), "none");
}

#[test]
fn search_emits_witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("found");
    let o = qbforge(&[
        "search",
        "--size",
        "5",
        "--class",
        "residuated-join",
        "--where",
        "PF != PF_vee",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let files: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 3);
    for f in &files {
        let (code, v) = json(&["validate", f.to_str().unwrap()]);
        assert_eq!(code, 0);
        let classes = v["data"]["classes"].as_array().unwrap();
        assert!(!classes.contains(&Value::from("pseudo_mtl")));
    }
    let o = qbforge(&["search", "--size", "5", "--class", "pseudo-hoop", "--where", "not coprime_laws"]);
    assert_eq!(o.status.code(), Some(0));
    let o = qbforge(&["search", "--size", "3", "--where", "false"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn catalog_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let list = stdout(&qbforge(&["catalog", "--list"]));
    for name in list.lines().filter(|l| !l.starts_with("families")) {
        let path = write_catalog(dir.path(), name);
        let first = std::fs::read_to_string(&path).unwrap();
        let o = qbforge(&["catalog", name]);
        assert_eq!(stdout(&o), first, "{name}");
        let (code, _) = json(&["validate", &path]);
        assert_eq!(code, 0, "{name}");
    }
}

#[test]
fn stdin_and_timing() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_catalog(dir.path(), "lukasiewicz:4");
    let o = Command::new(env!("CARGO_BIN_EXE_qbforge"))
        .args(["validate", "-", "--timing", "--format", "json"])
        .stdin(std::fs::File::open(&path).unwrap())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["timing_ms"].as_f64().is_some());
}

#[test]
fn primes_extension_and_theorems() {
    let (code, v) = json(&["primes", "@heyting-d5", "--filter", "{1}", "--element", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["extension"], serde_json::json!(["a", "c", "1"]));
    let (code, v) = json(&["primes", "@heyting-d5"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["verdicts"].as_array().unwrap().iter().map(|x| x["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["prime_filter_theorem", "mtl_iff"]);
}

#[test]
fn sweep_reports_the_known_failure_only() {
    let (code, v) = json(&["sweep", "--size", "3"]);
    assert_eq!(code, 1);
    for verdict in v["verdicts"].as_array().unwrap() {
        assert_eq!(verdict["holds"] == false, verdict["name"] == "supercompact", "{verdict}");
    }
}
