use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fibra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibra")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus")
}

#[test]
fn genus_bound_at_183() {
    let o = fibra(&["bounds", "--theorem", "3.2", "--pg", "183"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "91");
}

#[test]
fn k2_bound_at_3890_with_irregular_fibres() {
    let o = fibra(&["bounds", "--theorem", "4.2", "--pg", "3890", "--b", "0", "--qF", "positive"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("K^2 = 72, p_g(F) <= 36"), "{out}");
}

#[test]
fn parity_threshold() {
    let o = fibra(&["bounds", "--theorem", "parity"]);
    assert_eq!(stdout(&o).lines().next(), Some("55/56"));
}

#[test]
fn json_output() {
    let o = fibra(&["bounds", "--theorem", "4.2", "--pg", "865", "--b", "0", "--qF", "zero", "--emit-json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["theorem"], "4.2");
    assert_eq!(v["max_pg_f"], 37);
    assert!(v["max_K2"].as_u64().unwrap() <= 71);
}

#[test]
fn miyaoka_yau_sanity() {
    let o = fibra(&["bounds", "--theorem", "MY", "--k3", "72", "--chi", "3", "--emit-json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["rhs"], "216");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(fibra(&["bounds", "--theorem", "9.9"]).status.code(), Some(2));
    assert_eq!(fibra(&["bounds", "--theorem", "3.2"]).status.code(), Some(2));
    assert_eq!(fibra(&["bounds", "--theorem", "3.2", "--pg", "10"]).status.code(), Some(2));
    assert_eq!(fibra(&["verify", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn verify_passing_file_and_emit_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = fibra(&["verify", corpus().join("x_s_13.json").to_str().unwrap(), "--emit-json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["schema"], "fibra-report/1");
    assert_eq!(v["computed"]["pg_F"], 13);
    assert_eq!(v["passed"], true);
}

#[test]
fn tampered_file_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(corpus().join("x_s_13.json")).unwrap().replace("\"pg_F\": 13", "\"pg_F\": 14");
    let path = dir.path().join("x_s_13.json");
    std::fs::write(&path, text).unwrap();
    let o = fibra(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("mismatch pg_F: expected 14, computed 13"));
}

#[test]
fn corpus_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["x_s_13", "x_c_nu_9"] {
        std::fs::copy(corpus().join(format!("{id}.json")), dir.path().join(format!("{id}.json"))).unwrap();
    }
    let run = |parallel: bool| {
        let mut args = vec!["corpus"];
        if parallel {
            args.push("--parallel");
        }
        Command::new(env!("CARGO_BIN_EXE_fibra")).args(&args).env("FIBRA_CORPUS_DIR", dir.path()).output().unwrap()
    };
    let (a, b) = (run(false), run(true));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("missing: x_s_19"), "{out}");
    assert!(out.ends_with("2/2 passed\n"), "{out}");
    // an incomplete corpus is not a full pass
    assert_eq!(a.status.code(), Some(1));
}
