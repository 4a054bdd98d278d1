use super::report::ConstructionReport;
use super::schema::{ConstructionFile, FileKind};
use super::verify::verify;
use super::PipelineError;
use crate::par::{par_map, seq_map};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// The ten shipped constructions in canonical order, with the fibre
/// invariant (`p_g(F)` or `g(F)`) each one should produce.
pub const CORPUS: [(&str, i64); 10] = [
    ("x_s_19", 19),
    ("x_c_nu_13", 13),
    ("y_s_19", 19),
    ("y_c_nu_13", 13),
    ("z_s_19", 19),
    ("z_c_nu_13", 13),
    ("x_s_16", 16),
    ("x_c_nu_11", 11),
    ("x_s_13", 13),
    ("x_c_nu_9", 9),
];

/// `FIBRA_CORPUS_DIR`, or the corpus bundled with the crate.
pub fn corpus_dir() -> PathBuf {
    match std::env::var_os("FIBRA_CORPUS_DIR") {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus")),
    }
}

fn sibling_path(path: &Path, sibling: &str) -> PathBuf {
    path.parent().unwrap_or(Path::new(".")).join(format!("{sibling}.json"))
}

/// Loads and verifies one file; a Variant file pulls in its sibling from
/// the same directory.
pub fn verify_path(path: &Path) -> Result<ConstructionReport, PipelineError> {
    let file = ConstructionFile::load(path)?;
    let sibling = match (&file.kind, &file.sibling) {
        (FileKind::Variant, Some(s)) => {
            let p = sibling_path(path, s);
            if !p.exists() {
                return Err(PipelineError::MissingSibling { id: file.id.clone(), sibling: s.clone() });
            }
            let sib = ConstructionFile::load(&p)?;
            Some(verify(&sib, None))
        }
        _ => None,
    };
    Ok(verify(&file, sibling.as_ref()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub id: String,
    pub example: String,
    /// `pg_F` or `g_F`.
    pub quantity: Option<String>,
    pub value: Option<i64>,
    pub listed: Option<i64>,
    pub passed: bool,
    pub first_failure: Option<String>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub rows: Vec<CorpusRow>,
    /// Corpus ids with no file.
    pub missing: Vec<String>,
    pub passed: usize,
    pub total: usize,
    pub reports: Vec<ConstructionReport>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.missing.is_empty() && self.passed == self.total
    }

    pub fn render(&self) -> String {
        let mut out = format!("{:<12} {:<8} {:<6} {:>5} {:>6}  result\n", "id", "example", "qty", "value", "listed");
        for r in &self.rows {
            let v = |x: Option<i64>| x.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            let res = match (&r.error, r.passed) {
                (Some(e), _) => format!("ERROR {e}"),
                (None, true) => "PASS".into(),
                (None, false) => format!("FAIL at {}", r.first_failure.as_deref().unwrap_or("?")),
            };
            out += &format!(
                "{:<12} {:<8} {:<6} {:>5} {:>6}  {res}\n",
                r.id,
                r.example,
                r.quantity.as_deref().unwrap_or("-"),
                v(r.value),
                v(r.listed)
            );
        }
        for m in &self.missing {
            out += &format!("missing: {m}\n");
        }
        out += &format!("{}/{} passed\n", self.passed, self.total);
        out
    }
}

fn rank(id: &str) -> (usize, String) {
    (CORPUS.iter().position(|(c, _)| *c == id).unwrap_or(CORPUS.len()), id.to_string())
}

/// Verifies every `*.json` file in `dir`. Files are independent except
/// that Variant files reuse their sibling's report; rows come out in
/// corpus order whatever the scheduling.
pub fn run_corpus(dir: &Path, parallel: bool) -> Result<CorpusSummary, PipelineError> {
    let entries = std::fs::read_dir(dir).map_err(|e| PipelineError::Io { path: dir.display().to_string(), msg: e.to_string() })?;
    let mut paths: Vec<PathBuf> =
        entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "json")).collect();
    paths.sort();
    let mut loaded: Vec<(String, Result<ConstructionFile, PipelineError>)> =
        paths.iter().map(|p| (p.file_stem().unwrap_or_default().to_string_lossy().into_owned(), ConstructionFile::load(p))).collect();
    loaded.sort_by_key(|(id, _)| rank(id));

    let map = |items: &[&ConstructionFile], f: &(dyn Fn(&ConstructionFile) -> ConstructionReport + Sync)| -> Vec<ConstructionReport> {
        if parallel {
            par_map(items, |x| f(x))
        } else {
            seq_map(items, |x| f(x))
        }
    };
    let first: Vec<&ConstructionFile> =
        loaded.iter().filter_map(|(_, r)| r.as_ref().ok()).filter(|f| f.kind != FileKind::Variant).collect();
    let mut reports: BTreeMap<String, ConstructionReport> =
        map(&first, &|f| verify(f, None)).into_iter().map(|r| (r.id.clone(), r)).collect();
    let variants: Vec<&ConstructionFile> =
        loaded.iter().filter_map(|(_, r)| r.as_ref().ok()).filter(|f| f.kind == FileKind::Variant).collect();
    let done = reports.clone();
    for r in map(&variants, &|f| verify(f, f.sibling.as_ref().and_then(|s| done.get(s)))) {
        reports.insert(r.id.clone(), r);
    }

    let mut rows = Vec::new();
    let mut ordered = Vec::new();
    for (stem, file) in &loaded {
        let listed = CORPUS.iter().find(|(c, _)| c == stem).map(|(_, v)| *v);
        match file {
            Err(e) => rows.push(CorpusRow {
                id: stem.clone(),
                example: String::new(),
                quantity: None,
                value: None,
                listed,
                passed: false,
                first_failure: None,
                error: Some(e.to_string()),
            }),
            Ok(f) => {
                let rep = reports.remove(&f.id).expect("every loaded file is verified");
                let head = rep.headline();
                rows.push(CorpusRow {
                    id: rep.id.clone(),
                    example: rep.example.clone(),
                    quantity: head.as_ref().map(|h| h.0.clone()),
                    value: head.map(|h| h.1),
                    listed,
                    passed: rep.passed,
                    first_failure: rep.first_failure.clone(),
                    error: None,
                });
                ordered.push(rep);
            }
        }
    }
    let missing = CORPUS.iter().filter(|(c, _)| !loaded.iter().any(|(s, _)| s == c)).map(|(c, _)| c.to_string()).collect();
    let passed = rows.iter().filter(|r| r.passed).count();
    Ok(CorpusSummary { total: rows.len(), passed, rows, missing, reports: ordered })
}
