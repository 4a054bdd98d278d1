//! Construction files, the staged verification pipeline, reports and the
//! bundled corpus.

pub mod build;
pub mod corpus;
pub mod report;
pub mod schema;
mod verify;

pub use corpus::{corpus_dir, run_corpus, verify_path, CorpusRow, CorpusSummary, CORPUS};
pub use report::{Assertion, Comparison, ConstructionReport, PointRow, StageResult, Status, ASSERTED, REPORT_SCHEMA};
pub use schema::{ConstructionFile, FileKind, FILE_SCHEMA};
pub use verify::{verify, STANDARD_STAGES};

use thiserror::Error;

/// Input errors. Verification failures live inside the report instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("malformed construction file: {0}")]
    Json(String),
    #[error("unsupported schema version {0:?}")]
    SchemaVersion(String),
    #[error("invalid construction file: {0}")]
    Invalid(String),
    #[error("sibling {sibling} of {id} not found")]
    MissingSibling { id: String, sibling: String },
}
