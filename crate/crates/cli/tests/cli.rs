use std::process::{Command, Output};

fn projcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = projcode(&["verify", "theorem2", "2", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("theorem2 "));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for key in ["claim", "params", "status", "counts", "witnesses", "seed", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["status"], "pass");
    assert_eq!(v["counts"]["vectors_scanned"], 128);
}

#[test]
fn json_to_stdout_and_seed() {
    let run = || {
        let o = projcode(&[
            "verify", "lemma11", "4", "2", "7", "--trials", "5", "--seed", "9", "--json", "-",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["wall_time_ms"] = 0.into();
        v
    };
    let a = run();
    assert_eq!(a["seed"], 9);
    assert_eq!(a, run());
}

#[test]
fn skipped_guard_exits_zero() {
    let o = projcode(&["verify", "theorem1", "15", "4", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped-guard"));
    let o = projcode(&["verify", "theorem2", "3", "3", "--max-scan", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped-guard"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(projcode(&["verify", "theorem2", "2"]).status.code(), Some(2));
    assert_eq!(projcode(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        projcode(&["verify", "lemma12", "5", "3", "11", "--dim-u", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        projcode(&["construct", "remark1", "8", "3", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(projcode(&["graph", "build", "4", "2"]).status.code(), Some(2));
    assert_eq!(projcode(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn graph_build_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let json = dir.path().join("g.json");
    let o = projcode(&[
        "graph",
        "build",
        "7",
        "3",
        "2",
        "--predicate",
        "simplex",
        "--diameter",
        "--dot",
        dot.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("vertices: 30"));
    assert!(out.contains("edges: 105"));
    assert!(out.contains("regular of degree 7"));
    assert!(out.contains("diameter: 3"));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 30);
    assert_eq!(v["edges"].as_array().unwrap().len(), 105);
}

#[test]
fn construct_then_profile() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.txt");
    let o = projcode(&["construct", "lemma14", "6", "3", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = projcode(&["code", "profile", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let codes = v.as_array().unwrap();
    assert_eq!(codes.len(), 2);
    for c in codes {
        assert_eq!(c["n"], 6);
        assert_eq!(c["k"], 3);
        assert_eq!(c["projective"], true);
    }
}

#[test]
fn construct_fixtures_and_simplex() {
    let o = projcode(&["construct", "ternary-13-3", "--candidates"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| *l == "13 3 3 3 1").count(), 18);
    let o = projcode(&["construct", "binary-15-4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("15 4 2 2 1").count(), 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    std::fs::write(&path, stdout(&projcode(&["construct", "simplex", "3", "2"]))).unwrap();
    let v: serde_json::Value =
        serde_json::from_slice(&projcode(&["code", "profile", path.to_str().unwrap()]).stdout).unwrap();
    assert_eq!(v[0]["simplex"], true);
    assert_eq!(v[0]["weight_distribution"]["3"], 8);
}

#[test]
fn profile_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 1 2 2 1\n1 2 1\n").unwrap();
    assert_eq!(
        projcode(&["code", "profile", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        projcode(&["code", "profile", "/nonexistent/file"]).status.code(),
        Some(2)
    );
}
