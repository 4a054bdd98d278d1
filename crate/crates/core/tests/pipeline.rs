use fibra::pipeline::*;
use serde_json::json;
use std::path::{Path, PathBuf};

fn corpus_file(id: &str) -> PathBuf {
    corpus_dir().join(format!("{id}.json"))
}

fn load(id: &str) -> ConstructionFile {
    ConstructionFile::load(&corpus_file(id)).unwrap()
}

#[test]
fn report_round_trips_through_json() {
    let rep = verify_path(&corpus_file("x_s_13")).unwrap();
    let back = ConstructionReport::from_json(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
    assert_eq!(back.schema, REPORT_SCHEMA);
}

#[test]
fn full_report_round_trips_and_is_deterministic() {
    let a = verify_path(&corpus_file("x_s_19")).unwrap();
    let b = verify_path(&corpus_file("x_s_19")).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(ConstructionReport::from_json(&a.to_json()).unwrap(), a);
    assert!(a.passed);
    assert_eq!(a.get("pg_F"), Some(&json!(19)));
    assert_eq!(a.get("g_C_hat"), Some(&json!(6)));
    assert_eq!(a.get("base_points"), Some(&json!(6)));
}

#[test]
fn tampered_expectation_fails_at_comparison() {
    let mut f = load("x_s_19");
    f.expected.insert("K2_S".into(), json!(3));
    let rep = verify(&f, None);
    assert!(!rep.passed);
    assert_eq!(rep.first_failure.as_deref(), Some("comparison"));
    let bad: Vec<_> = rep.comparisons.iter().filter(|c| !c.ok).map(|c| c.key.as_str()).collect();
    assert_eq!(bad, ["K2_S"]);
    for s in STANDARD_STAGES.iter().filter(|s| **s != "comparison") {
        assert_eq!(rep.stage(s).map(|r| r.status), Some(Status::Pass), "{s}");
    }
}

#[test]
fn broken_surface_still_reports() {
    let mut f = load("x_s_19");
    f.surface.as_mut().unwrap().curves[0] = serde_json::from_value(json!({"name": "C1", "expr": "x - ", "degree": [1, 1]})).unwrap();
    let rep = verify(&f, None);
    assert!(!rep.passed);
    assert_eq!(rep.first_failure.as_deref(), Some("parse"));
    assert_eq!(rep.stage("resolution").unwrap().status, Status::Skipped);
    assert_eq!(rep.stage("comparison").unwrap().status, Status::Fail);
}

#[test]
fn dropped_point_fails_singular_locus() {
    let mut f = load("x_s_19");
    f.surface.as_mut().unwrap().points.pop();
    let rep = verify(&f, None);
    assert_eq!(rep.first_failure.as_deref(), Some("singular_locus"));
}

#[test]
fn wrong_schema_version_is_rejected() {
    let text = std::fs::read_to_string(corpus_file("x_c_nu_13")).unwrap().replace(FILE_SCHEMA, "fibra-construction/0");
    assert!(matches!(ConstructionFile::from_json(&text), Err(PipelineError::SchemaVersion(_))));
}

#[test]
fn unknown_field_is_rejected() {
    let text = std::fs::read_to_string(corpus_file("x_c_nu_13")).unwrap().replacen('{', "{\"extra\": 1,", 1);
    assert!(matches!(ConstructionFile::from_json(&text), Err(PipelineError::Json(_))));
}

#[test]
fn variant_without_sibling_report_fails_at_sibling() {
    let rep = verify(&load("x_c_nu_13"), None);
    assert_eq!(rep.first_failure.as_deref(), Some("sibling"));
}

#[test]
fn variant_reuses_sibling_pair() {
    let sib = verify_path(&corpus_file("x_s_13")).unwrap();
    let rep = verify(&load("x_c_nu_9"), Some(&sib));
    assert!(rep.passed);
    assert_eq!(rep.get("g_F"), Some(&json!(9)));
    assert_eq!(rep.get("g_C_hat"), Some(&json!(4)));
}

fn copy_corpus(skip: &[&str]) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (id, _) in CORPUS {
        if !skip.contains(&id) {
            std::fs::copy(corpus_file(id), dir.path().join(format!("{id}.json"))).unwrap();
        }
    }
    dir
}

fn literature_only(dir: &Path, ids: &[&str]) {
    for (id, _) in CORPUS {
        if !ids.contains(&id) {
            let _ = std::fs::remove_file(dir.join(format!("{id}.json")));
        }
    }
}

#[test]
fn removed_file_is_reported_missing() {
    let dir = copy_corpus(&["x_c_nu_11"]);
    literature_only(dir.path(), &["x_s_13", "x_c_nu_9", "x_c_nu_13"]);
    let s = run_corpus(dir.path(), false).unwrap();
    assert_eq!(s.rows.len(), 3);
    assert_eq!(s.missing.len(), 7);
    assert!(s.missing.contains(&"x_c_nu_11".to_string()));
    assert!(s.render().contains("missing: x_c_nu_11"));
    let c13 = s.rows.iter().find(|r| r.id == "x_c_nu_13").unwrap();
    assert_eq!(c13.first_failure.as_deref(), Some("sibling"));
    assert!(s.rows.iter().find(|r| r.id == "x_c_nu_9").unwrap().passed);
}

#[test]
fn malformed_file_becomes_an_error_row() {
    let dir = copy_corpus(&[]);
    literature_only(dir.path(), &["x_s_13", "x_c_nu_9"]);
    std::fs::write(dir.path().join("x_s_13.json"), "{ not json").unwrap();
    let s = run_corpus(dir.path(), true).unwrap();
    assert_eq!(s.rows.len(), 2);
    assert!(s.rows[0].error.is_some());
    assert!(!s.all_passed());
}

#[test]
fn full_corpus_with_one_file_removed() {
    let dir = copy_corpus(&["z_c_nu_13"]);
    let s = run_corpus(dir.path(), true).unwrap();
    assert_eq!(s.rows.len(), 9);
    assert_eq!(s.missing, ["z_c_nu_13"]);
    let order: Vec<_> = s.rows.iter().map(|r| r.id.as_str()).collect();
    let want: Vec<_> = CORPUS.iter().map(|c| c.0).filter(|c| *c != "z_c_nu_13").collect();
    assert_eq!(order, want);
}

#[test]
fn parallel_and_sequential_reports_are_identical() {
    let dir = corpus_dir();
    let a = run_corpus(&dir, false).unwrap();
    let b = run_corpus(&dir, true).unwrap();
    assert_eq!(a.render(), b.render());
    let ja: Vec<String> = a.reports.iter().map(|r| r.to_json()).collect();
    let jb: Vec<String> = b.reports.iter().map(|r| r.to_json()).collect();
    assert_eq!(ja, jb);
    for (row, (id, listed)) in a.rows.iter().zip(CORPUS) {
        assert_eq!(row.id, id);
        assert_eq!(row.value, Some(listed), "{id}");
    }
    // every expected key is one the pipeline computes
    for rep in &a.reports {
        for c in &rep.comparisons {
            assert!(c.computed.is_some(), "{}: {} never computed", rep.id, c.key);
        }
    }
}

/// Keys each shipped file must carry in its expected block: the values
/// stated for that example.
const STATED: &[(&str, &[&str])] = &[
    (
        "x_s_19",
        &[
            "singular_points",
            "strict_transform_smooth_after_one_blowup",
            "K_plus_delta_rank",
            "chi_S",
            "pg_S",
            "q_S",
            "K2_tilde",
            "minus_one_curves",
            "K2_S",
            "M_dot_B",
            "g_C_hat",
            "base_points",
            "d",
            "pg_F",
        ],
    ),
    ("x_c_nu_13", &["g_F", "pg_X"]),
    ("y_s_19", &["K2_S", "pg_S", "q_S", "g_C_hat", "pg_F"]),
    ("y_c_nu_13", &["g_F"]),
    ("z_s_19", &["K2_S", "pg_S", "q_S", "g_C_hat", "pg_F"]),
    ("z_c_nu_13", &["g_F"]),
    ("x_s_16", &["singular_points", "K2_S", "chi_S", "h0_M", "g_C_hat", "base_points", "pg_F"]),
    ("x_c_nu_11", &["g_F"]),
    ("x_s_13", &["g_C_hat", "d", "pg_F"]),
    ("x_c_nu_9", &["g_F"]),
];

#[test]
fn shipped_files_carry_every_stated_key() {
    assert_eq!(STATED.len(), CORPUS.len());
    for ((id, keys), (cid, listed)) in STATED.iter().zip(CORPUS) {
        assert_eq!(*id, cid);
        let f = load(id);
        assert_eq!(f.id, *id);
        for k in *keys {
            assert!(f.expected.contains_key(*k), "{id} lacks {k}");
        }
        let head = if f.expected.contains_key("pg_F") { "pg_F" } else { "g_F" };
        assert_eq!(f.expected[head], json!(listed), "{id}");
    }
}
